#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setlab/model/set_model.hpp"

namespace setlab {

class NonLocalBoundary : public std::runtime_error {
public:
  NonLocalBoundary(const std::string& what, std::vector<SiteId> offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  [[nodiscard]] const std::vector<SiteId>& offending() const noexcept { return offending_; }

private:
  std::vector<SiteId> offending_;
};

/// Finite shadow of a g-defect sector on a region: u is the restricted
/// symmetry, boundary_unitary the operator with u Omega = boundary_unitary
/// Omega on the vacuum. The sector automorphism is
/// sigma_g = Ad(boundary_unitary^* u), its inverse Ad(u^* boundary_unitary).
struct DefectSector {
  GroupElement g = kE;
  RegionPartition part;
  XdOperator u;
  XdOperator boundary_unitary;

  [[nodiscard]] XdOperator apply(const XdOperator& x) const;
  [[nodiscard]] XdOperator apply_inverse(const XdOperator& x) const;
};

/// boundary_unitary is W2 for (1,0) and (0,1) (with the sublattices
/// swapped for the latter), u_A W2_B u_A^* W2_A for (1,1), I for (0,0).
/// Throws NonLocalBoundary if it reaches beyond distance 1 of the loop.
DefectSector defect_sector(const HoneycombLattice& lat, const RegionPartition& part, GroupElement g);

struct SectorCheck {
  std::size_t generators = 0;
  bool composition = true;       // sigma^-1 sigma = sigma sigma^-1 = id on all generators
  bool matches_inside = true;    // acts as beta_g away from the boundary, inside
  bool trivial_outside = true;   // acts trivially away from the boundary, outside
  std::vector<SiteId> offending;
  [[nodiscard]] bool pass() const { return composition && matches_inside && trivial_outside; }
};

/// Checks the sector on sigma_x and sigma_z of every site.
SectorCheck check_defect_sector(const HoneycombLattice& lat, const DefectSector& s);

struct BoundaryUnitaryItem {
  int item = 0;
  bool pass = false;
  bool deferred = false;
  std::string detail;
  std::vector<SiteId> offending;
};

struct BoundaryUnitaryReport {
  std::vector<BoundaryUnitaryItem> items;
  /// First frame index from which conjugated probes no longer change.
  std::optional<std::size_t> stable_from;
  [[nodiscard]] bool pass() const;
};

/// Finite checks on the boundary unitary of the sector g.
/// lambda must lie inside lambda_prime; frames must be nested.
///  1. u Omega = W Omega: deferred to the state-vector oracle.
///  2. W_lambda^* W_lambda' is supported within distance 1 of the vertices of
///     lambda' that are not interior to lambda.
///  3. Ad(W) of the truncation lambda ∩ F_N on fixed probe generators stops
///     changing as N grows.
///  4. With u = W_lambda, u^* W_{lambda ∩ F_N} lives within distance 1 of
///     the boundary of lambda or of F_N.
BoundaryUnitaryReport boundary_unitary_check(const HoneycombLattice& lat, GroupElement g, const std::vector<PlaquetteId>& lambda,
                             const std::vector<PlaquetteId>& lambda_prime,
                             const std::vector<std::vector<PlaquetteId>>& frames);

} // namespace setlab
