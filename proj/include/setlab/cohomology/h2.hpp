#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "setlab/cohomology/finite_group.hpp"

namespace setlab::cohomology {

class SizeBoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct TorsionCount {
  std::int64_t divisor;
  std::uint64_t predicted;  // from the invariant factors
  std::uint64_t enumerated; // classes c with divisor * c = 0, by enumeration
};

struct H2Result {
  std::int64_t coefficient = 0;
  /// Cyclic decomposition Z_{f0} + Z_{f1} + ..., factors > 1 in divisibility order.
  std::vector<std::int64_t> invariant_factors;
  std::uint64_t order = 1;

  bool brute_forced = false;
  std::uint64_t cocycles = 0;
  std::uint64_t coboundaries = 0;
  std::uint64_t brute_force_order = 0;
  std::vector<TorsionCount> torsion;
  /// True when no enumeration was run or it matched the Smith form result.
  bool agrees = true;
};

inline constexpr std::size_t kMaxH2GroupOrder = 16;
inline constexpr std::int64_t kMaxH2Coefficient = 12;

/// H^2(G, Z_n) with trivial action from the unnormalized bar complex. The
/// Smith form answer is cross-checked by enumerating all 2-cochains when
/// there are at most `brute_force_limit` of them.
H2Result h2_trivial_action(const FiniteGroup& g, std::int64_t n, std::uint64_t brute_force_limit = 1ULL << 20);

} // namespace setlab::cohomology
