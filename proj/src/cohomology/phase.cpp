#include "setlab/cohomology/phase.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace setlab::cohomology {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Phase: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::from_sign(int sign) {
  if (sign == 1) return one();
  if (sign == -1) return minus_one();
  throw std::invalid_argument("Phase::from_sign: expected +1 or -1");
}

Phase Phase::parse(std::string_view text) {
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw std::invalid_argument("Phase::parse: bad number in '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {read(text), 1};
  return {read(text.substr(0, slash)), read(text.substr(slash + 1))};
}

int Phase::sign() const noexcept {
  if (num_ == 0) return 1;
  if (den_ == 2) return -1;
  return 0;
}

double Phase::real() const {
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
}

double Phase::imag() const {
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
}

std::string Phase::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Phase operator+(Phase a, Phase b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

Phase operator*(std::int64_t k, Phase a) {
  return {((k % a.den_) * a.num_) % a.den_, a.den_};
}

} // namespace setlab::cohomology
