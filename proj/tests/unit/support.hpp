#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "setlab/algebra/xd_operator.hpp"

namespace setlab::testing {

/// Random flip set plus up to four monomials of degree <= 3 on sites < n.
inline XdOperator random_op(std::mt19937_64& rng, SiteId n) {
  std::vector<SiteId> flips;
  for (SiteId s = 0; s < n; ++s) {
    if (rng() & 1) flips.push_back(s);
  }
  std::vector<Monomial> monos;
  for (std::size_t t = rng() % 5; t > 0; --t) {
    std::vector<SiteId> vars;
    for (std::size_t k = rng() % 4; k > 0; --k) vars.push_back(static_cast<SiteId>(rng() % n));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    monos.emplace_back(std::move(vars));
  }
  return XdOperator::x_product(flips) * XdOperator::diagonal(PhasePoly(std::move(monos)));
}

/// Dense real matrices on n qubits (bit s of the index is qubit s), built
/// straight from the gate definitions.
using Matrix = std::vector<std::vector<int>>;

inline Matrix mat_identity(std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  Matrix m(d, std::vector<int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix c(d, std::vector<int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline Matrix mat_x(std::size_t n, SiteId s) {
  const std::size_t d = std::size_t{1} << n;
  Matrix m(d, std::vector<int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i ^ (std::size_t{1} << s)][i] = 1;
  return m;
}

/// Diagonal with entry -1 where all listed bits are set.
inline Matrix mat_controlled_sign(std::size_t n, const std::vector<SiteId>& sites) {
  Matrix m = mat_identity(n);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const bool all = std::all_of(sites.begin(), sites.end(), [&](SiteId s) { return (i >> s) & 1; });
    if (all) m[i][i] = -1;
  }
  return m;
}

/// Matrix of an operator obtained by acting on basis states through apply_to_basis.
inline Matrix mat_of(const XdOperator& a, std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  Matrix m(d, std::vector<int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::uint8_t> z(n);
    for (std::size_t s = 0; s < n; ++s) z[s] = (i >> s) & 1;
    const auto [out, sign] = apply_to_basis(a, z);
    std::size_t j = 0;
    for (std::size_t s = 0; s < n; ++s) j |= std::size_t{out[s]} << s;
    m[j][i] = sign;
  }
  return m;
}

} // namespace setlab::testing
