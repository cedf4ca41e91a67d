#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <vector>

#include "setlab/algebra/xd_operator.hpp"

namespace setlab::oracle {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;
inline constexpr std::size_t kHardMaxQubits = 30;

class QubitLimitExceeded : public std::runtime_error {
public:
  QubitLimitExceeded(std::size_t requested, std::size_t limit);
  [[nodiscard]] std::size_t requested() const noexcept { return requested_; }
  [[nodiscard]] std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t requested_, limit_;
};

class SizeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense state on n qubits; qubit s is bit s of the basis index.
class StateVector {
public:
  /// |0...0>. Throws QubitLimitExceeded above max_qubits.
  explicit StateVector(std::size_t n, std::size_t max_qubits = kDefaultMaxQubits);
  static StateVector basis(std::size_t n, std::uint64_t index, std::size_t max_qubits = kDefaultMaxQubits);
  /// Independent uniform real and imaginary parts in [-1,1), normalized.
  static StateVector random(std::size_t n, std::mt19937_64& rng, std::size_t max_qubits = kDefaultMaxQubits);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amp_.size(); }
  [[nodiscard]] const std::vector<Amplitude>& amplitudes() const noexcept { return amp_; }
  std::vector<Amplitude>& amplitudes() noexcept { return amp_; }
  Amplitude& operator[](std::uint64_t i) { return amp_[i]; }
  Amplitude operator[](std::uint64_t i) const { return amp_[i]; }

  [[nodiscard]] double norm() const;
  /// Returns the norm before scaling; leaves the state alone if it is 0.
  double normalize();
  [[nodiscard]] Amplitude inner(const StateVector& other) const;
  [[nodiscard]] double distance(const StateVector& other) const;

private:
  std::size_t n_;
  std::vector<Amplitude> amp_;
};

/// An XdOperator as bit masks: flip mask plus one mask per monomial.
struct CompiledOp {
  std::uint64_t flip = 0;
  std::vector<std::uint64_t> monomials;
  bool negate = false;

  [[nodiscard]] bool sign_negative(std::uint64_t z) const;
};

/// Throws SizeMismatch if the operator touches a site >= n.
CompiledOp compile(const XdOperator& a, std::size_t n);

StateVector apply_xd(const XdOperator& a, const StateVector& s);
StateVector apply_xd(const CompiledOp& a, const StateVector& s);
/// Applies ops.back() first, ops.front() last, so the list reads as a product.
StateVector apply_product(const std::vector<XdOperator>& ops, const StateVector& s);
Amplitude expectation(const XdOperator& a, const StateVector& s);
Amplitude expectation(const CompiledOp& a, const StateVector& s);
/// s <- (s + A s) / 2
void project_plus(const XdOperator& a, StateVector& s);

/// Binary dump: "SLSV" magic, uint32 format version, uint32 n, uint32
/// endianness tag 0x01020304 in host order, then 2^n (re, im) doubles.
void write_state(const std::filesystem::path& path, const StateVector& s);
StateVector read_state(const std::filesystem::path& path, std::size_t max_qubits = kHardMaxQubits);

} // namespace setlab::oracle
