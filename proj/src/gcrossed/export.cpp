#include "setlab/gcrossed/export.hpp"

namespace setlab::gcrossed {

AbelianAnyonData anyon_data_from_strings(const AnyonRepresentatives& reps) {
  AbelianAnyonData d;
  d.labels = anyon_names();
  d.fusion.assign(kNumAnyons, std::vector<std::size_t>(kNumAnyons));
  d.braid.assign(kNumAnyons, std::vector<Phase>(kNumAnyons));
  const XdOperator& x = reps[Anyon::EX].op;
  const XdOperator& z = reps[Anyon::EZ].op;
  const int cross = commutator_phase(x, z);
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    for (std::size_t b = 0; b < kNumAnyons; ++b) {
      d.fusion[a][b] = a ^ b;
      const bool both = (a & 1) && (b & 2);
      d.braid[a][b] = Phase::from_sign(both ? cross : 1);
    }
  }
  std::vector<Phase> twist;
  for (std::size_t a = 0; a < kNumAnyons; ++a) twist.push_back(d.braid[a][a]);
  d.twist = twist;
  return d;
}

std::vector<std::vector<std::vector<Phase>>> y_from_w_table(const AnyonRepresentatives& reps, const WTable& w) {
  std::vector<std::vector<std::vector<Phase>>> y(kNumAnyons,
                                                 std::vector<std::vector<Phase>>(kNumAnyons, std::vector<Phase>(kGroupOrder)));
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    const XdOperator& s = reps.strings[a].op;
    for (std::size_t b = 0; b < kNumAnyons; ++b) {
      for (GroupElement g = 0; g < kGroupOrder; ++g) {
        const WEntry& wa = w.w[a][g];
        const WEntry& wb = w.w[b][g];
        const WEntry& wab = w.w[a ^ b][g];
        const XdOperator ratio = (wa.op * (s * wb.op * s.inverse())).inverse() * wab.op;
        const int sign = ratio.scalar_sign();
        if (sign == 0) {
          throw NonScalarOperator("y(" + anyon_name(static_cast<Anyon>(a)) + "," +
                                      anyon_name(static_cast<Anyon>(b)) + ")(" + element_name(g) + ") is not a phase",
                                  ratio);
        }
        y[a][b][g] = Phase::from_sign(sign) + wab.phase - wa.phase - wb.phase;
      }
    }
  }
  return y;
}

SetCategoryData export_model_data(const HoneycombLattice& lat) {
  const SetModel model(lat);
  const AnyonRepresentatives reps = default_representatives(lat);
  const WTable w = w_table_example(lat, reps);
  std::vector<std::vector<std::size_t>> theta(kNumAnyons, std::vector<std::size_t>(kGroupOrder));
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    for (GroupElement g = 0; g < kGroupOrder; ++g) theta[a][g] = model.module().act(a, g);
  }
  SetCategoryData d{anyon_data_from_strings(reps),
                    model.group(),
                    std::move(theta),
                    std::vector<std::size_t>(kNumAnyons, model.group().identity()),
                    omega_table(lat, w),
                    y_from_w_table(reps, w),
                    std::nullopt};
  d.validate_shape();
  return d;
}

} // namespace setlab::gcrossed
