#include "setlab/report/lattice_spec.hpp"

#include <charconv>

namespace setlab::report {

namespace {

constexpr int kMaxCells = 64;

int parse_dim(std::string_view s, const std::string& whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1 || v > kMaxCells) {
    throw UsageError("bad lattice size '" + whole + "': expected AxB with 1 <= A,B <= " + std::to_string(kMaxCells));
  }
  return v;
}

LatticeSpec parse(const std::string& text, LatticeKind kind) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("bad lattice size '" + text + "': expected AxB");
  const std::string_view sv(text);
  return {kind, parse_dim(sv.substr(0, x), text), parse_dim(sv.substr(x + 1), text)};
}

} // namespace

LatticeSpec LatticeSpec::torus(const std::string& text) { return parse(text, LatticeKind::Torus); }
LatticeSpec LatticeSpec::patch(const std::string& text) { return parse(text, LatticeKind::Patch); }

HoneycombLattice LatticeSpec::build() const {
  return kind == LatticeKind::Torus ? HoneycombLattice::torus(a, b) : HoneycombLattice::patch(a, b);
}

std::string LatticeSpec::text() const {
  return std::string(kind == LatticeKind::Torus ? "torus " : "patch ") + std::to_string(a) + "x" + std::to_string(b);
}

} // namespace setlab::report
