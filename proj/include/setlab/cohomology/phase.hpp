#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace setlab::cohomology {

/// Exact element of U(1) written as exp(2 pi i q) with q = num/den in [0,1),
/// stored reduced. Addition is the group law.
class Phase {
public:
  constexpr Phase() = default;
  /// Any integers; reduced mod 1 and to lowest terms.
  Phase(std::int64_t num, std::int64_t den);

  static Phase one() { return {}; }
  static Phase minus_one() { return {1, 2}; }
  /// +1 -> 0, -1 -> 1/2.
  static Phase from_sign(int sign);
  /// Parses "num/den" (or a bare integer).
  static Phase parse(std::string_view text);

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }
  /// Multiplicative order as a root of unity.
  [[nodiscard]] std::int64_t order() const noexcept { return den_; }
  [[nodiscard]] bool is_one() const noexcept { return num_ == 0; }
  /// +1/-1 when the phase is real, 0 otherwise.
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] double real() const;
  [[nodiscard]] double imag() const;
  /// "num/den"
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Phase conj() const { return {-num_, den_}; }
  friend Phase operator+(Phase a, Phase b);
  friend Phase operator-(Phase a, Phase b) { return a + b.conj(); }
  Phase& operator+=(Phase b) { return *this = *this + b; }
  /// k-fold product.
  friend Phase operator*(std::int64_t k, Phase a);
  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase&, const Phase&) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace setlab::cohomology
