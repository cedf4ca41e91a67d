#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace setlab::cohomology {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// U * M * V = D (mod n). D is diagonal; each diagonal entry is a divisor of n
/// (0 standing for n), and d_0 | d_1 | ... with zeros last. v_inv = V^-1.
struct SmithForm {
  std::int64_t modulus = 0;
  IntMatrix d, u, v, v_inv;
  std::vector<std::int64_t> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& m, std::int64_t n);

IntMatrix identity_matrix(std::size_t n);
IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, std::int64_t n);
std::vector<std::int64_t> mat_vec_mod(const IntMatrix& a, const std::vector<std::int64_t>& x, std::int64_t n);

/// Some x with A x = b (mod n), or nullopt. `cols` is needed when A has no rows.
std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                   std::int64_t n, std::size_t cols);

/// Inverse of a mod n, which must be a unit.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

} // namespace setlab::cohomology
