#include "setlab/cohomology/classes.hpp"

#include <numeric>

#include "setlab/cohomology/smith.hpp"

namespace setlab::cohomology {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::int64_t scaled(Phase p, std::int64_t n) {
  if (n % p.den() != 0) {
    throw UnboundedValueGroup("value " + p.to_string() + " is not in Z_" + std::to_string(n));
  }
  return p.num() * (n / p.den());
}

std::vector<std::int64_t> flatten(const Cochain2& c, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& plane : c.values) {
    for (const auto& row : plane) {
      for (const Phase& p : row) out.push_back(scaled(p, n));
    }
  }
  return out;
}

// Column s = coboundary of the 1-cochain with 1/n in slot s.
IntMatrix coboundary_matrix(const GModule& m, std::int64_t n) {
  const std::size_t order = m.group().order();
  const std::size_t slots = m.num_labels() * order;
  const std::size_t rows = m.num_labels() * order * order;
  IntMatrix a(rows, std::vector<std::int64_t>(slots, 0));
  for (std::size_t s = 0; s < slots; ++s) {
    Cochain1 unit = Cochain1::constant(m.num_labels(), order);
    unit.at(s / order, s % order) = Phase(1, n);
    const auto col = flatten(coboundary(unit, m), n);
    for (std::size_t r = 0; r < rows; ++r) a[r][s] = col[r];
  }
  return a;
}

Cochain1 to_cochain(const std::vector<std::int64_t>& x, const GModule& m, std::int64_t n) {
  const std::size_t order = m.group().order();
  Cochain1 c = Cochain1::constant(m.num_labels(), order);
  for (std::size_t s = 0; s < x.size(); ++s) c.at(s / order, s % order) = Phase(x[s], n);
  return c;
}

} // namespace

ClassComparison cohomologous(const Cochain2& eta1, const Cochain2& eta2, const GModule& m, const ClassOptions& opt) {
  require_shape(eta1, m);
  require_shape(eta2, m);
  ClassComparison out;
  const std::int64_t n = opt.modulus.value_or(std::lcm(value_order(eta1), value_order(eta2)));
  if (n < 1 || n > kMaxValueOrder) {
    throw UnboundedValueGroup("value group Z_" + std::to_string(n) + " exceeds the supported order " +
                              std::to_string(kMaxValueOrder));
  }
  out.modulus = n;
  const std::vector<std::int64_t> diff = flatten(eta2 - eta1, n);
  const std::size_t slots = m.num_labels() * m.group().order();

  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t i = 0; i < slots && small; ++i) {
    space *= static_cast<std::uint64_t>(n);
    small = space <= opt.search_bound;
  }

  if (small) {
    out.searched = true;
    const IntMatrix a = coboundary_matrix(m, n);
    std::vector<std::int64_t> lambda(slots, 0);
    std::vector<std::int64_t> current(diff.size(), 0);
    for (;;) {
      ++out.candidates;
      if (current == diff) {
        out.answer = Answer::Yes;
        out.witness = to_cochain(lambda, m, n);
        out.detail = "rephasing found by exhaustive search over Z_" + std::to_string(n);
        return out;
      }
      // Odometer step; d is linear so each increment adds one column.
      std::size_t s = 0;
      for (; s < slots; ++s) {
        lambda[s] = (lambda[s] + 1) % n;
        for (std::size_t r = 0; r < current.size(); ++r) current[r] = (current[r] + a[r][s]) % n;
        if (lambda[s] != 0) break;
      }
      if (s == slots) break;
    }
    out.detail = "no rephasing among " + std::to_string(out.candidates) + " Z_" + std::to_string(n) + " candidates";
  }

  if (!opt.linear_solve) {
    if (!small) out.detail = "search space exceeds bound and linear solve disabled";
    return out;
  }
  const std::int64_t big = n * static_cast<std::int64_t>(m.group().order());
  const IntMatrix a = coboundary_matrix(m, big);
  std::vector<std::int64_t> b = diff;
  for (auto& x : b) x *= big / n;
  out.solved = true;
  const auto sol = solve_mod(a, b, big, slots);
  const std::string how = "linear solve over Z_" + std::to_string(big);
  if (sol) {
    out.answer = Answer::Yes;
    out.witness = to_cochain(*sol, m, big);
    out.detail = out.detail.empty() ? how : out.detail + "; rephasing found by " + how;
  } else {
    out.answer = Answer::No;
    out.detail = out.detail.empty() ? "no solution by " + how : out.detail + "; no solution by " + how;
  }
  return out;
}

} // namespace setlab::cohomology
