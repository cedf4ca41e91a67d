#include "setlab/oracle/state_vector.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace setlab::oracle {

QubitLimitExceeded::QubitLimitExceeded(std::size_t requested, std::size_t limit)
    : std::runtime_error("state of " + std::to_string(requested) + " qubits exceeds the limit of " +
                         std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

StateVector::StateVector(std::size_t n, std::size_t max_qubits) : n_(n) {
  const std::size_t limit = std::min(max_qubits, kHardMaxQubits);
  if (n > limit) throw QubitLimitExceeded(n, limit);
  amp_.assign(std::size_t{1} << n, Amplitude{});
  amp_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index, std::size_t max_qubits) {
  StateVector s(n, max_qubits);
  if (index >= s.dimension()) throw SizeMismatch("basis index out of range");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

StateVector StateVector::random(std::size_t n, std::mt19937_64& rng, std::size_t max_qubits) {
  StateVector s(n, max_qubits);
  for (auto& a : s.amp_) {
    const double re = 2.0 * unit_interval(rng) - 1.0;
    const double im = 2.0 * unit_interval(rng) - 1.0;
    a = {re, im};
  }
  s.normalize();
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amp_) acc += std::norm(a);
  return std::sqrt(acc);
}

double StateVector::normalize() {
  const double nrm = norm();
  if (nrm > 0.0) {
    for (auto& a : amp_) a /= nrm;
  }
  return nrm;
}

Amplitude StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) throw SizeMismatch("inner product of states of different size");
  Amplitude acc{};
  for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::conj(amp_[i]) * other.amp_[i];
  return acc;
}

double StateVector::distance(const StateVector& other) const {
  if (other.n_ != n_) throw SizeMismatch("distance between states of different size");
  double acc = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::norm(amp_[i] - other.amp_[i]);
  return std::sqrt(acc);
}

bool CompiledOp::sign_negative(std::uint64_t z) const {
  bool neg = negate;
  for (std::uint64_t m : monomials) neg ^= (z & m) == m;
  return neg;
}

CompiledOp compile(const XdOperator& a, std::size_t n) {
  if (a.min_universe() > n) {
    throw SizeMismatch("operator touches site " + std::to_string(a.min_universe() - 1) + " of a " +
                       std::to_string(n) + "-qubit state");
  }
  CompiledOp c;
  for (SiteId s : a.xsupport()) c.flip |= std::uint64_t{1} << s;
  for (const Monomial& m : a.poly().monomials()) {
    if (m.is_constant()) {
      c.negate = !c.negate;
      continue;
    }
    std::uint64_t mask = 0;
    for (SiteId v : m.vars()) mask |= std::uint64_t{1} << v;
    c.monomials.push_back(mask);
  }
  return c;
}

StateVector apply_xd(const CompiledOp& a, const StateVector& s) {
  StateVector out = s;
  auto& dst = out.amplitudes();
  const auto& src = s.amplitudes();
  for (std::uint64_t z = 0; z < src.size(); ++z) {
    dst[z ^ a.flip] = a.sign_negative(z) ? -src[z] : src[z];
  }
  return out;
}

StateVector apply_xd(const XdOperator& a, const StateVector& s) {
  return apply_xd(compile(a, s.num_qubits()), s);
}

StateVector apply_product(const std::vector<XdOperator>& ops, const StateVector& s) {
  StateVector out = s;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out = apply_xd(*it, out);
  return out;
}

Amplitude expectation(const CompiledOp& a, const StateVector& s) {
  const auto& amp = s.amplitudes();
  Amplitude acc{};
  // <s|A|s> = sum_z conj(s[z ^ x]) (-1)^{p(z)} s[z]
  for (std::uint64_t z = 0; z < amp.size(); ++z) {
    const Amplitude t = std::conj(amp[z ^ a.flip]) * amp[z];
    acc += a.sign_negative(z) ? -t : t;
  }
  return acc;
}

Amplitude expectation(const XdOperator& a, const StateVector& s) {
  return expectation(compile(a, s.num_qubits()), s);
}

void project_plus(const XdOperator& a, StateVector& s) {
  const StateVector as = apply_xd(a, s);
  auto& amp = s.amplitudes();
  for (std::size_t i = 0; i < amp.size(); ++i) amp[i] = 0.5 * (amp[i] + as[i]);
}

namespace {

constexpr char kMagic[4] = {'S', 'L', 'S', 'V'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kEndianTag = 0x01020304;

std::uint32_t swap32(std::uint32_t v) { return __builtin_bswap32(v); }
std::uint64_t swap64(std::uint64_t v) { return __builtin_bswap64(v); }

template <class T>
void put(std::ofstream& f, T v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::ifstream& f) {
  T v{};
  f.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!f) throw std::runtime_error("truncated state dump");
  return v;
}

} // namespace

void write_state(const std::filesystem::path& path, const StateVector& s) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(f, kVersion);
  put<std::uint32_t>(f, static_cast<std::uint32_t>(s.num_qubits()));
  put<std::uint32_t>(f, kEndianTag);
  for (const auto& a : s.amplitudes()) {
    put<double>(f, a.real());
    put<double>(f, a.imag());
  }
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

StateVector read_state(const std::filesystem::path& path, std::size_t max_qubits) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  f.read(magic, sizeof magic);
  if (!f || std::memcmp(magic, kMagic, sizeof magic) != 0) throw std::runtime_error("not a state dump");
  if (get<std::uint32_t>(f) != kVersion) throw std::runtime_error("unsupported state dump version");
  const auto n = get<std::uint32_t>(f);
  const auto tag = get<std::uint32_t>(f);
  const bool swap = tag == swap32(kEndianTag);
  if (!swap && tag != kEndianTag) throw std::runtime_error("bad endianness tag");
  const std::uint32_t qubits = swap ? swap32(n) : n;
  StateVector s(qubits, max_qubits);
  for (auto& a : s.amplitudes()) {
    double re = get<double>(f);
    double im = get<double>(f);
    if (swap) {
      re = std::bit_cast<double>(swap64(std::bit_cast<std::uint64_t>(re)));
      im = std::bit_cast<double>(swap64(std::bit_cast<std::uint64_t>(im)));
    }
    a = {re, im};
  }
  return s;
}

} // namespace setlab::oracle
