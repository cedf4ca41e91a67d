#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "setlab/cohomology/finite_group.hpp"

namespace setlab::testing {

/// |Z^2| / |B^2| for H^2(G, Z_n) with trivial action, by listing every
/// function G x G -> Z_n and every G -> Z_n. Only for tiny inputs.
inline std::uint64_t brute_h2_order(const cohomology::FiniteGroup& g, std::int64_t n) {
  const std::size_t k = g.order();
  const std::size_t cells = k * k;
  const auto un = static_cast<std::uint64_t>(n);
  auto decode = [&](std::uint64_t idx, std::vector<std::int64_t>& out) {
    for (auto& x : out) {
      x = static_cast<std::int64_t>(idx % un);
      idx /= un;
    }
  };
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= un;
  std::uint64_t cocycles = 0;
  std::vector<std::int64_t> f(cells);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, f);
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      for (std::size_t b = 0; b < k && ok; ++b) {
        for (std::size_t c = 0; c < k && ok; ++c) {
          const auto lhs = f[b * k + c] + f[a * k + g.mul(b, c)];
          const auto rhs = f[g.mul(a, b) * k + c] + f[a * k + b];
          ok = (lhs - rhs) % n == 0;
        }
      }
    }
    if (ok) ++cocycles;
  }
  std::uint64_t lambdas = 1;
  for (std::size_t i = 0; i < k; ++i) lambdas *= un;
  std::set<std::vector<std::int64_t>> boundaries;
  std::vector<std::int64_t> l(k), d(cells);
  for (std::uint64_t idx = 0; idx < lambdas; ++idx) {
    decode(idx, l);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) d[a * k + b] = (((l[a] + l[b] - l[g.mul(a, b)]) % n) + n) % n;
    }
    boundaries.insert(d);
  }
  return cocycles / boundaries.size();
}

} // namespace setlab::testing
