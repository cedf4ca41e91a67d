#include "setlab/cohomology/smith.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace setlab::cohomology {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  x %= n;
  return x < 0 ? x + n : x;
}

// s*a + t*b = g >= 0
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

class Reducer {
public:
  Reducer(const IntMatrix& m, std::int64_t n)
      : n_(n), rows_(m.size()), cols_(m.empty() ? 0 : m[0].size()) {
    f_.d = m;
    for (auto& row : f_.d) {
      if (row.size() != cols_) throw std::invalid_argument("smith_normal_form: ragged matrix");
      for (auto& x : row) x = mod(x, n_);
    }
    f_.modulus = n_;
    f_.u = identity_matrix(rows_);
    f_.v = identity_matrix(cols_);
    f_.v_inv = identity_matrix(cols_);
  }

  SmithForm run() {
    const std::size_t r = std::min(rows_, cols_);
    for (std::size_t k = 0; k < r; ++k) {
      if (!place_pivot(k)) break;
      clear(k);
    }
    for (std::size_t k = 0; k < r; ++k) f_.diagonal.push_back(f_.d[k][k]);
    return std::move(f_);
  }

private:
  // rows i,j <- [[p,q],[r,s]] * rows i,j
  void row_op(std::size_t i, std::size_t j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    for (IntMatrix* m : {&f_.d, &f_.u}) {
      for (std::size_t c = 0; c < (*m)[i].size(); ++c) {
        const std::int64_t x = (*m)[i][c], y = (*m)[j][c];
        (*m)[i][c] = mod(p * x + q * y, n_);
        (*m)[j][c] = mod(r * x + s * y, n_);
      }
    }
  }

  // col i <- p col i + q col j ; col j <- r col i + s col j
  void col_op(std::size_t i, std::size_t j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    for (IntMatrix* m : {&f_.d, &f_.v}) {
      for (auto& row : *m) {
        const std::int64_t x = row[i], y = row[j];
        row[i] = mod(p * x + q * y, n_);
        row[j] = mod(r * x + s * y, n_);
      }
    }
    const std::int64_t di = inverse_mod(mod(p * s - r * q, n_), n_);
    auto& vi = f_.v_inv;
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::int64_t x = vi[i][c], y = vi[j][c];
      vi[i][c] = mod(di * mod(s * x - r * y, n_), n_);
      vi[j][c] = mod(di * mod(-q * x + p * y, n_), n_);
    }
  }

  void scale_row(std::size_t i, std::int64_t u) {
    for (IntMatrix* m : {&f_.d, &f_.u}) {
      for (auto& x : (*m)[i]) x = mod(u * x, n_);
    }
  }

  bool place_pivot(std::size_t k) {
    std::size_t bi = rows_, bj = cols_;
    std::int64_t best_g = 0, best_x = 0;
    for (std::size_t i = k; i < rows_; ++i) {
      for (std::size_t j = k; j < cols_; ++j) {
        const std::int64_t x = f_.d[i][j];
        if (x == 0) continue;
        const std::int64_t g = std::gcd(x, n_);
        if (bi == rows_ || g < best_g || (g == best_g && x < best_x)) {
          bi = i;
          bj = j;
          best_g = g;
          best_x = x;
        }
      }
    }
    if (bi == rows_) return false;
    if (bi != k) row_op(k, bi, 0, 1, 1, 0);
    if (bj != k) col_op(k, bj, 0, 1, 1, 0);
    normalize(k);
    return true;
  }

  void normalize(std::size_t k) {
    const std::int64_t x = f_.d[k][k];
    const std::int64_t g = std::gcd(x, n_);
    if (x == g) return;
    const std::int64_t np = n_ / g;
    std::int64_t u0 = np == 1 ? 1 : inverse_mod((x / g) % np, np);
    while (std::gcd(u0, n_) != 1) u0 += np;
    scale_row(k, u0);
  }

  void clear(std::size_t k) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = k + 1; i < rows_; ++i) {
        const std::int64_t a = f_.d[k][k], b = f_.d[i][k];
        if (b == 0) continue;
        if (b % a == 0) {
          row_op(k, i, 1, 0, -(b / a), 1);
        } else {
          auto [g, s, t] = ext_gcd(a, b);
          row_op(k, i, s, t, -(b / g), a / g);
          dirty = true;
        }
      }
      for (std::size_t j = k + 1; j < cols_; ++j) {
        const std::int64_t a = f_.d[k][k], b = f_.d[k][j];
        if (b == 0) continue;
        if (b % a == 0) {
          col_op(k, j, 1, 0, -(b / a), 1);
        } else {
          auto [g, s, t] = ext_gcd(a, b);
          col_op(k, j, s, t, -(b / g), a / g);
          dirty = true;
        }
      }
      if (dirty) continue;
      bool column_clear = true;
      for (std::size_t i = k + 1; i < rows_; ++i) column_clear = column_clear && f_.d[i][k] == 0;
      if (!column_clear) continue;
      const std::int64_t a = f_.d[k][k];
      std::size_t bad = rows_;
      for (std::size_t i = k + 1; i < rows_ && bad == rows_; ++i) {
        for (std::size_t j = k + 1; j < cols_; ++j) {
          if (f_.d[i][j] % a != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows_) break;
      row_op(k, bad, 1, 1, 0, 1);
    }
    normalize(k);
  }

  std::int64_t n_;
  std::size_t rows_, cols_;
  SmithForm f_;
};

} // namespace

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  auto [g, s, t] = ext_gcd(mod(a, n), n);
  (void)t;
  if (g != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(s, n);
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, std::int64_t n) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("mat_mul_mod: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = mod(c[i][j] + a[i][k] * b[k][j], n);
    }
  }
  return c;
}

std::vector<std::int64_t> mat_vec_mod(const IntMatrix& a, const std::vector<std::int64_t>& x, std::int64_t n) {
  std::vector<std::int64_t> y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec_mod: shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = mod(y[i] + a[i][j] * x[j], n);
  }
  return y;
}

SmithForm smith_normal_form(const IntMatrix& m, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("smith_normal_form: modulus must be positive");
  return Reducer(m, n).run();
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                   std::int64_t n, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_mod: right-hand side has wrong length");
  if (a.empty()) return std::vector<std::int64_t>(cols, 0);
  const SmithForm f = smith_normal_form(a, n);
  const std::vector<std::int64_t> c = mat_vec_mod(f.u, b, n);
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t d = i < f.diagonal.size() ? f.diagonal[i] : 0;
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    if (c[i] % d != 0) return std::nullopt;
    y[i] = c[i] / d;
  }
  return mat_vec_mod(f.v, y, n);
}

} // namespace setlab::cohomology
