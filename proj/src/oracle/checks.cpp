#include "setlab/oracle/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace setlab::oracle {

GroundStateBundle ground_state(const HoneycombLattice& lat, std::size_t max_qubits) {
  const std::size_t n = lat.num_sites();
  StateVector ref(n, max_qubits);
  std::uint64_t vertex_mask = 0;
  for (VertexId v = 0; v < lat.num_vertices(); ++v) vertex_mask |= std::uint64_t{1} << lat.vertex_site(v);
  {
    // |+> on every vertex qubit, |0> on every edge qubit.
    auto& amp = ref.amplitudes();
    amp[0] = 0.0;
    const double c = std::pow(2.0, -0.5 * static_cast<double>(lat.num_vertices()));
    std::uint64_t sub = 0;
    do {
      amp[sub] = c;
      sub = (sub - vertex_mask) & vertex_mask;
    } while (sub != 0);
  }
  GroundStateBundle b{ref, ref, {}};
  for (VertexId v = 0; v < lat.num_vertices(); ++v) b.stabilizers.push_back(vertex_op(lat, v));
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    const XdOperator bp = plaquette_op(lat, p);
    b.stabilizers.push_back(bp);
    project_plus(bp, b.reference);
    if (b.reference.normalize() < 1e-12) throw std::logic_error("plaquette projection annihilated the state");
  }
  b.omega = apply_xd(entangler_full(lat).product(), b.reference);
  return b;
}

double stabilizer_deviation(const GroundStateBundle& b) {
  double worst = 0.0;
  for (const XdOperator& s : b.stabilizers) worst = std::max(worst, std::abs(expectation(s, b.reference) - 1.0));
  return worst;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

} // namespace

std::vector<XdOperator> random_local_observables(const HoneycombLattice& lat, std::size_t count,
                                                 std::mt19937_64& rng) {
  const EntanglerCircuit full = entangler_full(lat);
  std::vector<XdOperator> out;
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId v = static_cast<VertexId>(pick(rng, lat.num_vertices()));
    const std::vector<SiteId> ball = thickened_sites(lat, {v}, 1);
    if (i % 2 == 0) {
      std::vector<SiteId> flips;
      for (SiteId s : ball) {
        if (coin(rng)) flips.push_back(s);
      }
      std::vector<Monomial> monos;
      const std::size_t terms = pick(rng, 4);
      for (std::size_t t = 0; t < terms; ++t) {
        std::vector<SiteId> vars;
        const std::size_t deg = 1 + pick(rng, 3);
        for (std::size_t k = 0; k < deg; ++k) vars.push_back(ball[pick(rng, ball.size())]);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        monos.emplace_back(std::move(vars));
      }
      if (coin(rng)) monos.emplace_back();
      out.push_back(XdOperator::x_product(flips) * XdOperator::diagonal(PhasePoly(std::move(monos))));
    } else {
      XdOperator a;
      for (VertexId w : lat.vertex_ball({v}, 1)) {
        if (coin(rng)) a *= vertex_op(lat, w);
        if (coin(rng)) a *= alpha_conjugate(full, XdOperator::pauli_x(lat.vertex_site(w)));
      }
      for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
        const auto& pv = lat.plaquette_vertices(p);
        if (std::find(pv.begin(), pv.end(), v) != pv.end() && coin(rng)) {
          a *= alpha_conjugate(full, plaquette_op(lat, p));
        }
      }
      out.push_back(a);
    }
  }
  return out;
}

InvarianceResult symmetry_invariance_check(const GroundStateBundle& b, const HoneycombLattice& lat, GroupElement g,
                                           const std::vector<XdOperator>& observables) {
  // phi(beta_g(A)) = <u omega| A |u omega> with u the global symmetry operator.
  const StateVector moved = apply_xd(global_action(lat, g).op, b.omega);
  InvarianceResult r;
  for (const XdOperator& a : observables) {
    const CompiledOp c = compile(a, b.omega.num_qubits());
    const Amplitude before = expectation(c, b.omega);
    const Amplitude after = expectation(c, moved);
    r.max_deviation = std::max(r.max_deviation, std::abs(after - before));
    if (std::abs(before) > 1e-6) ++r.nonzero;
    ++r.samples;
  }
  return r;
}

double boundary_excitation_check(const GroundStateBundle& b, const HoneycombLattice& lat, const RegionPartition& part,
                                 GroupElement g) {
  const DefectSector s = defect_sector(lat, part, g);
  return apply_xd(s.u, b.omega).distance(apply_xd(s.boundary_unitary, b.omega));
}

std::uint64_t ground_space_dimension(const HoneycombLattice& lat, const std::vector<PlaquetteId>& dropped) {
  std::vector<XdOperator> gens;
  for (VertexId v = 0; v < lat.num_vertices(); ++v) gens.push_back(vertex_op(lat, v));
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    if (std::find(dropped.begin(), dropped.end(), p) == dropped.end()) gens.push_back(plaquette_op(lat, p));
  }
  const std::size_t m = gens.size();
  const std::size_t e = lat.num_edges();
  if (m > 24 || e > 62) throw QubitLimitExceeded(std::max(m, e), 24);
  // tr prod_i (1 + S_i)/2 = 2^(e - m) * sum over subsets of tr(prod S_T) / 2^e.
  // Walk the subsets in Gray-code order, one multiplication per step.
  std::int64_t signed_count = 1;  // empty product is +I
  XdOperator prod;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << m); ++k) {
    const auto i = static_cast<std::size_t>(std::countr_zero(k));
    prod *= gens[i];  // generators commute and square to I
    signed_count += prod.scalar_sign();
  }
  if (signed_count <= 0) return 0;
  auto count = static_cast<std::uint64_t>(signed_count);
  if (e >= m) return count << (e - m);
  const std::uint64_t div = std::uint64_t{1} << (m - e);
  if (count % div != 0) throw std::logic_error("projector trace is not an integer");
  return count / div;
}

IdentityAgreement dense_identity_check(const std::vector<XdOperator>& lhs, const std::vector<XdOperator>& rhs,
                                       std::size_t n, std::size_t states, std::mt19937_64& rng,
                                       std::size_t max_qubits) {
  IdentityAgreement r;
  for (std::size_t k = 0; k < states; ++k) {
    const StateVector s = StateVector::random(n, rng, max_qubits);
    r.max_distance = std::max(r.max_distance, apply_product(lhs, s).distance(apply_product(rhs, s)));
    ++r.states;
  }
  return r;
}

} // namespace setlab::oracle
