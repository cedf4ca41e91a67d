#include "setlab/cohomology/h2.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

#include "setlab/cohomology/smith.hpp"

namespace setlab::cohomology {

namespace {

// d1: C^1 -> C^2, rows indexed g*|G|+h.
IntMatrix bar_d1(const FiniteGroup& G, std::int64_t n) {
  const std::size_t m = G.order();
  IntMatrix d(m * m, std::vector<std::int64_t>(m, 0));
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      auto& row = d[g * m + h];
      row[h] += 1;
      row[G.mul(g, h)] -= 1;
      row[g] += 1;
      for (auto& x : row) x = ((x % n) + n) % n;
    }
  }
  return d;
}

// d2: C^2 -> C^3, rows indexed (g*|G|+h)*|G|+k.
IntMatrix bar_d2(const FiniteGroup& G, std::int64_t n) {
  const std::size_t m = G.order();
  IntMatrix d(m * m * m, std::vector<std::int64_t>(m * m, 0));
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      for (std::size_t k = 0; k < m; ++k) {
        auto& row = d[(g * m + h) * m + k];
        row[h * m + k] += 1;
        row[G.mul(g, h) * m + k] -= 1;
        row[g * m + G.mul(h, k)] += 1;
        row[g * m + h] -= 1;
        for (auto& x : row) x = ((x % n) + n) % n;
      }
    }
  }
  return d;
}

std::uint64_t encode(const std::vector<std::int64_t>& v, std::int64_t n) {
  std::uint64_t code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(*it);
  return code;
}

bool next_digits(std::vector<std::int64_t>& v, std::int64_t n) {
  for (auto& x : v) {
    if (++x < n) return true;
    x = 0;
  }
  return false;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

void brute_force(const FiniteGroup& G, std::int64_t n, const IntMatrix& d1, const IntMatrix& d2, H2Result& r) {
  const std::size_t m = G.order();
  std::unordered_set<std::uint64_t> boundaries;
  std::vector<std::int64_t> lambda(m, 0);
  do {
    boundaries.insert(encode(mat_vec_mod(d1, lambda, n), n));
  } while (next_digits(lambda, n));

  const auto divs = divisors(n);
  std::vector<std::uint64_t> killed(divs.size(), 0);
  std::vector<std::int64_t> omega(m * m, 0), scaled(m * m);
  do {
    bool closed = true;
    for (const auto& row : d2) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * omega[j];
      if (s % n != 0) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    ++r.cocycles;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      for (std::size_t j = 0; j < omega.size(); ++j) scaled[j] = (divs[i] * omega[j]) % n;
      if (boundaries.count(encode(scaled, n)) != 0) ++killed[i];
    }
  } while (next_digits(omega, n));

  r.brute_forced = true;
  r.coboundaries = boundaries.size();
  r.brute_force_order = r.cocycles / r.coboundaries;
  r.agrees = r.brute_force_order == r.order && r.cocycles % r.coboundaries == 0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    std::uint64_t predicted = 1;
    for (std::int64_t f : r.invariant_factors) predicted *= static_cast<std::uint64_t>(std::gcd(divs[i], f));
    const std::uint64_t enumerated = killed[i] / r.coboundaries;
    r.torsion.push_back({divs[i], predicted, enumerated});
    r.agrees = r.agrees && predicted == enumerated;
  }
}

} // namespace

H2Result h2_trivial_action(const FiniteGroup& G, std::int64_t n, std::uint64_t brute_force_limit) {
  if (G.order() > kMaxH2GroupOrder) {
    throw SizeBoundExceeded("h2: group order " + std::to_string(G.order()) + " exceeds " +
                            std::to_string(kMaxH2GroupOrder));
  }
  if (n < 1 || n > kMaxH2Coefficient) {
    throw SizeBoundExceeded("h2: coefficient order " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxH2Coefficient));
  }
  const std::size_t m = G.order();
  const IntMatrix d1 = bar_d1(G, n);
  const IntMatrix d2 = bar_d2(G, n);

  // ker d2 = { V y : D y = 0 } = sum of cyclic pieces generated by (n/o_i) V e_i.
  const SmithForm f2 = smith_normal_form(d2, n);
  const std::size_t cols = m * m;
  std::vector<std::int64_t> kernel_order(cols, n);
  for (std::size_t i = 0; i < f2.diagonal.size(); ++i) {
    if (f2.diagonal[i] != 0) kernel_order[i] = f2.diagonal[i];
  }

  // Relations on the kernel generators: image of d1 plus o_i e_i.
  IntMatrix rel;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::int64_t> col(cols);
    for (std::size_t r = 0; r < cols; ++r) col[r] = d1[r][j];
    const std::vector<std::int64_t> y = mat_vec_mod(f2.v_inv, col, n);
    std::vector<std::int64_t> coords(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
      const std::int64_t step = n / kernel_order[i];
      if (y[i] % step != 0) throw std::logic_error("h2: coboundary outside cocycle group");
      coords[i] = (y[i] / step) % kernel_order[i];
    }
    rel.push_back(std::move(coords));
  }
  for (std::size_t i = 0; i < cols; ++i) {
    std::vector<std::int64_t> row(cols, 0);
    row[i] = kernel_order[i] % n;
    rel.push_back(std::move(row));
  }

  const SmithForm q = smith_normal_form(rel, n);
  H2Result r;
  r.coefficient = n;
  for (std::int64_t s : q.diagonal) {
    const std::int64_t factor = s == 0 ? n : s;
    if (factor > 1) {
      r.invariant_factors.push_back(factor);
      r.order *= static_cast<std::uint64_t>(factor);
    }
  }

  std::uint64_t cochains = 1;
  bool small = true;
  for (std::size_t i = 0; i < cols && small; ++i) {
    cochains *= static_cast<std::uint64_t>(n);
    small = cochains <= brute_force_limit;
  }
  if (small) brute_force(G, n, d1, d2, r);
  return r;
}

} // namespace setlab::cohomology
