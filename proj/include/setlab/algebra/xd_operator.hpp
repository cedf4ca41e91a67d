#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setlab/algebra/phase_poly.hpp"

namespace setlab {

/// An element of the group generated by bit flips and diagonal +-1 phases.
///
/// Acts on computational basis states as U|z> = (-1)^{p(z)} |z xor x>: the
/// phase is read off the input state, then the flip is applied. Products of
/// sigma_x, sigma_z, CZ and CCZ all live here, and the global sign is the
/// constant monomial of p. Both parts are stored canonically, so == is
/// operator equality.
class XdOperator {
public:
  /// Identity.
  XdOperator() = default;
  XdOperator(std::vector<SiteId> xsupport, PhasePoly poly);

  static XdOperator identity() { return {}; }
  static XdOperator minus_identity();
  static XdOperator pauli_x(SiteId v);
  static XdOperator pauli_z(SiteId v);
  static XdOperator cz(SiteId u, SiteId v);
  static XdOperator ccz(SiteId u, SiteId v, SiteId w);
  static XdOperator diagonal(PhasePoly p);
  /// Product of sigma_x over a multiset of sites (repeated sites cancel).
  static XdOperator x_product(std::span<const SiteId> sites);
  /// Product of sigma_z over a multiset of sites.
  static XdOperator z_product(std::span<const SiteId> sites);

  /// Parses the canonical text form produced by to_string().
  static XdOperator parse(std::string_view text);

  [[nodiscard]] const std::vector<SiteId>& xsupport() const noexcept { return xsupport_; }
  [[nodiscard]] const PhasePoly& poly() const noexcept { return poly_; }

  [[nodiscard]] bool is_diagonal() const noexcept { return xsupport_.empty(); }
  [[nodiscard]] bool is_identity() const noexcept { return xsupport_.empty() && poly_.is_zero(); }
  /// +1 or -1 when the operator is a multiple of the identity, 0 otherwise.
  [[nodiscard]] int scalar_sign() const noexcept;
  /// Sorted union of flipped sites and phase variables.
  [[nodiscard]] std::vector<SiteId> support() const;
  /// Largest SiteId touched plus one (0 for scalars).
  [[nodiscard]] std::size_t min_universe() const;
  /// True when U = U^{-1}, i.e. p is invariant under the flip.
  [[nodiscard]] bool is_involution() const;

  [[nodiscard]] XdOperator inverse() const;
  [[nodiscard]] XdOperator negated() const;

  /// Canonical text: `X{ids}; P{monomial;monomial;...}` with `1` for the
  /// constant monomial and `z3*z7` for products.
  [[nodiscard]] std::string to_string() const;

  friend XdOperator operator*(const XdOperator& a, const XdOperator& b);
  XdOperator& operator*=(const XdOperator& b) { return *this = *this * b; }
  friend bool operator==(const XdOperator&, const XdOperator&) = default;

private:
  std::vector<SiteId> xsupport_;
  PhasePoly poly_;
};

/// Thrown when a group commutator is not +-I.
class NonScalarCommutator : public std::runtime_error {
public:
  explicit NonScalarCommutator(XdOperator residual);
  [[nodiscard]] const XdOperator& residual() const noexcept { return residual_; }

private:
  XdOperator residual_;
};

XdOperator op_multiply(const XdOperator& a, const XdOperator& b);
XdOperator op_inverse(const XdOperator& a);
/// a b a^{-1}
XdOperator op_conjugate(const XdOperator& a, const XdOperator& b);
/// a b a^{-1} b^{-1}
XdOperator group_commutator(const XdOperator& a, const XdOperator& b);
/// s in {+1,-1} with a b a^{-1} b^{-1} = s I; throws NonScalarCommutator.
int commutator_phase(const XdOperator& a, const XdOperator& b);

/// (z xor x, (-1)^{p(z)}); throws std::invalid_argument when the operator
/// touches a site outside the bitstring.
std::pair<std::vector<std::uint8_t>, int> apply_to_basis(const XdOperator& a,
                                                         std::span<const std::uint8_t> z);

} // namespace setlab
