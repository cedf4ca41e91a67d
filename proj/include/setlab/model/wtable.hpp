#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "setlab/cohomology/cochain.hpp"
#include "setlab/model/strings.hpp"

namespace setlab {

/// exp(2 pi i phase) * op
struct WEntry {
  cohomology::Phase phase;
  XdOperator op;
  friend bool operator==(const WEntry&, const WEntry&) = default;
};

/// W_a^(g) for every label a and group element g, indexed [a][g].
struct WTable {
  VertexId v0 = 0;
  std::array<std::array<WEntry, kGroupOrder>, kNumAnyons> w;

  [[nodiscard]] const WEntry& at(Anyon a, GroupElement g) const { return w[static_cast<std::size_t>(a)][g]; }
  WEntry& at(Anyon a, GroupElement g) { return w[static_cast<std::size_t>(a)][g]; }
};

class NonScalarOperator : public std::runtime_error {
public:
  NonScalarOperator(const std::string& what, XdOperator residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  [[nodiscard]] const XdOperator& residual() const noexcept { return residual_; }

private:
  XdOperator residual_;
};

/// W_a^(g) = factor at v0 of beta_g(S_a) S_a^{-1}. For the dressed X string
/// this gives I, sigma_z(v0), I, -sigma_z(v0) for g = (0,0), (1,0), (0,1), (1,1).
WTable w_table_example(const HoneycombLattice& lat, const AnyonRepresentatives& reps);

/// W_a^(g) -> exp(2 pi i lambda_a(g)) W_a^(g)
WTable rephase(const WTable& w, const cohomology::Cochain1& lambda);

/// omega^(a)(g,h) = (W_a^(g))^* beta_g((W_a^(h))^*) W_a^(gh), the labels being
/// fixed by the action. Throws NonScalarOperator if some product is not a phase.
cohomology::OmegaTable omega_table(const HoneycombLattice& lat, const WTable& w);

/// eta' - eta where eta' is recomputed from the rephased table.
cohomology::Cochain2 coboundary_from_rephasing(const HoneycombLattice& lat, const cohomology::Cochain1& lambda,
                                               const WTable& w, const cohomology::GModule& m);

struct YFailure {
  Anyon a, b;
  GroupElement g, h;
  cohomology::Phase lhs, rhs;
  bool scalar = true;
};

struct YCheck {
  bool pass = true;
  std::size_t instances = 0;
  std::vector<YFailure> failures;
};

/// With Y_{a,b}^(g) = (W_a^(g) T_a(W_b^(g)))^* and T_a = Ad(S_a):
/// Y^(g) beta_g(Y^(h)) (Y^(gh))^* = omega^(a)(g,h) omega^(b)(g,h) for all a, b, g, h.
YCheck y_operator_check(const HoneycombLattice& lat, const AnyonRepresentatives& reps, const WTable& w,
                                const cohomology::OmegaTable& omega);

} // namespace setlab
