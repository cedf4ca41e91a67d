#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "setlab/cohomology/cochain.hpp"

namespace setlab::cohomology {

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

struct ClassOptions {
  /// Largest number of rephasings tried by exhaustive search.
  std::uint64_t search_bound = 1ULL << 20;
  /// Value group Z_n; defaults to the lcm of all entry orders.
  std::optional<std::int64_t> modulus;
  /// Decide by solving over Z_{n |G|} when the search finds nothing or is too large.
  bool linear_solve = true;
};

struct ClassComparison {
  Answer answer = Answer::Unknown;
  std::int64_t modulus = 1;
  bool searched = false;
  std::uint64_t candidates = 0;
  bool solved = false;
  /// lambda with eta2 = eta1 + d lambda.
  std::optional<Cochain1> witness;
  std::string detail;
};

class UnboundedValueGroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kMaxValueOrder = 1 << 12;

/// Whether eta2 - eta1 is a coboundary. First tries every Z_n-valued lambda
/// (when n^(labels |G|) <= search_bound), then solves the linear system over
/// Z_{n |G|}, which contains every U(1)-valued solution up to a 1-cocycle.
ClassComparison cohomologous(const Cochain2& eta1, const Cochain2& eta2, const GModule& m,
                             const ClassOptions& opt = {});

} // namespace setlab::cohomology
