#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "setlab/algebra/xd_operator.hpp"
#include "setlab/cohomology/cochain.hpp"
#include "setlab/lattice/loop.hpp"
#include "setlab/model/stabilizers.hpp"

namespace setlab {

/// Elements of Z2 x Z2 by index a + 2b: bit 0 flips the A sublattice, bit 1
/// the B sublattice.
using GroupElement = std::size_t;
inline constexpr GroupElement kE = 0;
inline constexpr GroupElement kA = 1;
inline constexpr GroupElement kB = 2;
inline constexpr GroupElement kAB = 3;
inline constexpr std::size_t kGroupOrder = 4;

/// "(0,0)", "(1,0)", "(0,1)", "(1,1)"
std::string element_name(GroupElement g);
bool flips(GroupElement g, Sublattice s);

/// sigma_x on a vertex set: the operator of a global symmetry or of its
/// restriction to a region.
struct SymmetryAction {
  GroupElement g = kE;
  std::vector<VertexId> support;
  XdOperator op;
};

SymmetryAction global_action(const HoneycombLattice& lat, GroupElement g);
/// sigma_x on (V_int + V_bd) restricted to the sublattices flipped by g.
SymmetryAction restricted_action(const HoneycombLattice& lat, const RegionPartition& part, GroupElement g);
/// u_A(L)
SymmetryAction ua_restriction(const HoneycombLattice& lat, const RegionPartition& part);
/// u_B(L)
SymmetryAction ub_restriction(const HoneycombLattice& lat, const RegionPartition& part);

/// beta_g(x): conjugation by sigma_x on every vertex of the flipped
/// sublattices (only vertices in the support of x matter).
XdOperator beta(const HoneycombLattice& lat, GroupElement g, const XdOperator& x);

/// W_L and its split W_L = W1 W2 for the restricted action on sublattice s.
/// For s = A: W_L = prod CZ(v_eB, e) over edges with v_eA in V_int + V_bd;
/// W1 gathers the full stars of B vertices whose star lies in E_int + E_bd.
/// For s = B the sublattices swap.
struct BoundaryW {
  Sublattice sublattice = Sublattice::A;
  XdOperator w, w1, w2;
  std::vector<VertexId> full_star_vertices;
  std::vector<std::pair<VertexId, EdgeId>> w1_factors, w2_factors;
};

BoundaryW boundary_w(const HoneycombLattice& lat, const RegionPartition& part, Sublattice s = Sublattice::A);

/// I (x) |0><0|_v + A_v (x) |1><1|_v for the star of v: the per-vertex factor of W1.
XdOperator controlled_star(const HoneycombLattice& lat, VertexId v);

struct RestrictionIdentityResult {
  bool pass = false;
  /// (u U)(W_L U u)^{-1}; identity on success.
  XdOperator residual;
  /// Edges whose CCZ factor is needed (they touch the support of u) but is
  /// absent from the circuit.
  std::vector<EdgeId> missed;
};

/// u U = W_L U u for the restricted action on sublattice s and the circuit U.
RestrictionIdentityResult verify_restriction_identity(const HoneycombLattice& lat, const RegionPartition& part, const EntanglerCircuit& circ,
                         Sublattice s = Sublattice::A);

/// Sites within graph distance r of a vertex set: the vertex sites of the
/// ball and every edge with an endpoint in it.
std::vector<SiteId> thickened_sites(const HoneycombLattice& lat, const std::vector<VertexId>& seeds, int r);

/// Sites of the lattice not in `allowed` that x touches.
std::vector<SiteId> support_outside(const XdOperator& x, const std::vector<SiteId>& allowed);

/// Abelian anyons of the toric code, fusing as Z2 x Z2 by index.
enum class Anyon : std::size_t { One = 0, EX = 1, EZ = 2, F = 3 };
inline constexpr std::size_t kNumAnyons = 4;
/// "1", "eX", "eZ", "f"
std::string anyon_name(Anyon a);
std::vector<std::string> anyon_names();
inline Anyon fuse(Anyon a, Anyon b) {
  return static_cast<Anyon>(static_cast<std::size_t>(a) ^ static_cast<std::size_t>(b));
}

/// Lattice plus the Klein group acting by beta_A, beta_B, and the anyon
/// label set {1, eX, eZ, f} with trivial label action.
class SetModel {
public:
  explicit SetModel(HoneycombLattice lat);

  [[nodiscard]] const HoneycombLattice& lattice() const noexcept { return lat_; }
  [[nodiscard]] const cohomology::FiniteGroup& group() const noexcept { return module_.group(); }
  [[nodiscard]] const cohomology::GModule& module() const noexcept { return module_; }
  [[nodiscard]] const EntanglerCircuit& entangler() const noexcept { return full_; }

  [[nodiscard]] XdOperator beta(GroupElement g, const XdOperator& x) const { return setlab::beta(lat_, g, x); }
  [[nodiscard]] XdOperator alpha(const XdOperator& x) const { return alpha_conjugate(full_, x); }

private:
  HoneycombLattice lat_;
  cohomology::GModule module_;
  EntanglerCircuit full_;
};

} // namespace setlab
