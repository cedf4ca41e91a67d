#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setlab::cohomology {

class InvalidGroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Finite group given by its multiplication table on elements 0..n-1.
/// The table is checked for closure, associativity, identity and inverses
/// at construction.
class FiniteGroup {
public:
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  static FiniteGroup cyclic(std::size_t n);
  /// Z2 x Z2 with elements ordered (0,0), (1,0), (0,1), (1,1).
  static FiniteGroup klein();
  /// Element (g,h) has index g + |G| h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  /// "z<n>", "z2z2" / "klein", or products joined by 'x' such as "z2xz3".
  static FiniteGroup by_name(std::string_view name);

  [[nodiscard]] std::size_t order() const noexcept { return table_.size(); }
  [[nodiscard]] std::size_t identity() const noexcept { return identity_; }
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  [[nodiscard]] std::size_t inv(std::size_t a) const { return inverse_[a]; }
  [[nodiscard]] bool is_abelian() const;
  /// Least common multiple of element orders.
  [[nodiscard]] std::size_t exponent() const;
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  [[nodiscard]] const std::string& name(std::size_t g) const { return names_.at(g); }

private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
};

} // namespace setlab::cohomology
