#include "setlab/model/wtable.hpp"

namespace setlab {

using cohomology::Cochain1;
using cohomology::Cochain2;
using cohomology::OmegaTable;
using cohomology::Phase;

WTable w_table_example(const HoneycombLattice& lat, const AnyonRepresentatives& reps) {
  WTable t;
  t.v0 = reps.v0();
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    const AnyonString& s = reps.strings[a];
    for (GroupElement g = 0; g < kGroupOrder; ++g) {
      const auto factors = symmetry_endpoint_action(lat, g, s.op, s.endpoints);
      t.w[a][g] = {Phase{}, factors.front().op};
    }
  }
  return t;
}

WTable rephase(const WTable& w, const Cochain1& lambda) {
  if (lambda.values.size() != kNumAnyons) throw std::invalid_argument("rephase: wrong number of labels");
  WTable out = w;
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    if (lambda.values[a].size() != kGroupOrder) throw std::invalid_argument("rephase: wrong group order");
    for (GroupElement g = 0; g < kGroupOrder; ++g) out.w[a][g].phase += lambda(a, g);
  }
  return out;
}

namespace {

Phase scalar_phase(const XdOperator& x, const std::string& what) {
  const int s = x.scalar_sign();
  if (s == 0) throw NonScalarOperator(what + " is not a multiple of the identity", x);
  return Phase::from_sign(s);
}

} // namespace

OmegaTable omega_table(const HoneycombLattice& lat, const WTable& w) {
  OmegaTable om = OmegaTable::constant(kNumAnyons, kGroupOrder);
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    for (GroupElement g = 0; g < kGroupOrder; ++g) {
      for (GroupElement h = 0; h < kGroupOrder; ++h) {
        const WEntry& wg = w.w[a][g];
        const WEntry& wh = w.w[a][h];
        const WEntry& wgh = w.w[a][g ^ h];
        const XdOperator x = wg.op.inverse() * beta(lat, g, wh.op.inverse()) * wgh.op;
        const std::string what = "omega(" + anyon_name(static_cast<Anyon>(a)) + ")(" + element_name(g) + "," +
                                 element_name(h) + ")";
        om.at(a, g, h) = scalar_phase(x, what) + wgh.phase - wg.phase - wh.phase;
      }
    }
  }
  return om;
}

Cochain2 coboundary_from_rephasing(const HoneycombLattice& lat, const Cochain1& lambda, const WTable& w,
                                   const cohomology::GModule& m) {
  const Cochain2 before = cohomology::eta_from_omega(omega_table(lat, w), m);
  const Cochain2 after = cohomology::eta_from_omega(omega_table(lat, rephase(w, lambda)), m);
  return after - before;
}

YCheck y_operator_check(const HoneycombLattice& lat, const AnyonRepresentatives& reps, const WTable& w,
                                const OmegaTable& omega) {
  YCheck out;
  // Y^(g) as (operator, phase) for a fixed pair.
  auto y = [&](std::size_t a, std::size_t b, GroupElement g) {
    const WEntry& wa = w.w[a][g];
    const WEntry& wb = w.w[b][g];
    const XdOperator& s = reps.strings[a].op;
    const XdOperator t = s * wb.op * s.inverse();
    return WEntry{(wa.phase + wb.phase).conj(), (wa.op * t).inverse()};
  };
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    for (std::size_t b = 0; b < kNumAnyons; ++b) {
      for (GroupElement g = 0; g < kGroupOrder; ++g) {
        for (GroupElement h = 0; h < kGroupOrder; ++h) {
          ++out.instances;
          const WEntry yg = y(a, b, g);
          const WEntry yh = y(a, b, h);
          const WEntry ygh = y(a, b, g ^ h);
          const XdOperator x = yg.op * beta(lat, g, yh.op) * ygh.op.inverse();
          const Phase rhs = omega(a, g, h) + omega(b, g, h);
          const int sign = x.scalar_sign();
          if (sign == 0) {
            out.pass = false;
            out.failures.push_back({static_cast<Anyon>(a), static_cast<Anyon>(b), g, h, Phase{}, rhs, false});
            continue;
          }
          const Phase lhs = Phase::from_sign(sign) + yg.phase + yh.phase - ygh.phase;
          if (lhs != rhs) {
            out.pass = false;
            out.failures.push_back({static_cast<Anyon>(a), static_cast<Anyon>(b), g, h, lhs, rhs, true});
          }
        }
      }
    }
  }
  return out;
}

} // namespace setlab
