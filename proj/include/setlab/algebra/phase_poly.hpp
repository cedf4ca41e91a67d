#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setlab {

/// Dense index of one qubit (a lattice vertex or edge).
using SiteId = std::uint32_t;

/// Product of Boolean variables z_v over a strictly sorted set of sites.
/// The empty monomial is the constant 1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<SiteId> vars);
  Monomial(std::initializer_list<SiteId> vars);

  [[nodiscard]] const std::vector<SiteId>& vars() const noexcept { return vars_; }
  [[nodiscard]] std::size_t degree() const noexcept { return vars_.size(); }
  [[nodiscard]] bool is_constant() const noexcept { return vars_.empty(); }
  [[nodiscard]] bool contains(SiteId v) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<SiteId> vars_;
};

/// Polynomial over F2 in multilinear form: a set of monomials with XOR
/// addition. Canonical storage is the lexicographically sorted monomial list
/// with no duplicates, so structural equality is functional equality.
class PhasePoly {
public:
  PhasePoly() = default;
  /// Monomials appearing an even number of times cancel.
  explicit PhasePoly(std::vector<Monomial> monomials);
  PhasePoly(std::initializer_list<Monomial> monomials);

  static PhasePoly constant_one();
  static PhasePoly variable(SiteId v);

  [[nodiscard]] const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  [[nodiscard]] bool is_zero() const noexcept { return monomials_.empty(); }
  [[nodiscard]] bool has_constant() const;
  /// True when the polynomial is 0 or 1.
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] std::size_t degree() const;
  /// Sorted union of all variables.
  [[nodiscard]] std::vector<SiteId> variables() const;

  /// p(z) for an assignment indexed by SiteId; sites past the end read as 0.
  [[nodiscard]] bool evaluate(std::span<const std::uint8_t> bits) const;

  PhasePoly& operator+=(const PhasePoly& other);
  friend PhasePoly operator+(PhasePoly lhs, const PhasePoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const PhasePoly&, const PhasePoly&) = default;

private:
  std::vector<Monomial> monomials_;
};

PhasePoly poly_add(const PhasePoly& p, const PhasePoly& q);

/// Returns q with q(z) = p(z xor x) for the flip set x (sorted or not).
PhasePoly poly_substitute(const PhasePoly& p, std::span<const SiteId> flips);

/// Symmetric difference of two sorted site lists.
std::vector<SiteId> symmetric_difference(std::span<const SiteId> a, std::span<const SiteId> b);

/// Sorts and removes pairs of equal ids (mod-2 reduction of a multiset).
std::vector<SiteId> reduce_mod2(std::vector<SiteId> ids);

std::string to_string(const Monomial& m);

} // namespace setlab
