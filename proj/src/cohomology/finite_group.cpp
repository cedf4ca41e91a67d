#include "setlab/cohomology/finite_group.hpp"

#include <charconv>
#include <numeric>

namespace setlab::cohomology {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidGroup("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidGroup("group table is not square");
    for (std::size_t x : row) {
      if (x >= n) throw InvalidGroup("group table entry out of range");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroup("group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InvalidGroup("group table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
  }
  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back(std::to_string(a));
  }
  if (names_.size() != n) throw InvalidGroup("wrong number of element names");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order();
  const std::size_t n = m * h.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + g.name(x % m) + "," + h.name(x / m) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      t[x][y] = g.mul(x % m, y % m) + m * h.mul(x / m, y / m);
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::klein() { return direct_product(cyclic(2), cyclic(2)); }

FiniteGroup FiniteGroup::by_name(std::string_view name) {
  if (name == "klein" || name == "z2z2") return klein();
  const auto x = name.find('x');
  if (x != std::string_view::npos) {
    return direct_product(by_name(name.substr(0, x)), by_name(name.substr(x + 1)));
  }
  if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'Z')) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc{} && ptr == name.data() + name.size() && n > 0) return cyclic(n);
  }
  throw InvalidGroup("unknown group name '" + std::string(name) + "'");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = table_[x][a]) ++k;
    e = std::lcm(e, k);
  }
  return e;
}

} // namespace setlab::cohomology
