#pragma once

#include <random>
#include <vector>

#include "setlab/model/defect.hpp"
#include "setlab/oracle/state_vector.hpp"

namespace setlab::oracle {

/// reference = |0..0>_E (x) |+..+>_V projected by prod (1 + B_p)/2;
/// omega = U_CCZ(full) reference.
struct GroundStateBundle {
  StateVector reference;
  StateVector omega;
  std::vector<XdOperator> stabilizers;  // every A_v, then every B_p
};

/// Throws QubitLimitExceeded past max_qubits and std::logic_error if the
/// projection annihilates the state.
GroundStateBundle ground_state(const HoneycombLattice& lat, std::size_t max_qubits = kDefaultMaxQubits);

/// max |<S> - 1| over the stabilizers on the reference state.
double stabilizer_deviation(const GroundStateBundle& b);

/// Random operators on the sites within distance 1 of a random vertex: a
/// random flip set, a random degree <= 3 diagonal part, and, for every
/// other sample, the entangler-dressed version of a stabilizer product so
/// that some expectations are nonzero.
std::vector<XdOperator> random_local_observables(const HoneycombLattice& lat, std::size_t count,
                                                 std::mt19937_64& rng);

struct InvarianceResult {
  double max_deviation = 0.0;
  std::size_t samples = 0;
  /// Samples with |phi(A)| > 1e-6.
  std::size_t nonzero = 0;
};

/// max |phi(beta_g(A)) - phi(A)| with phi the vacuum expectation on omega.
InvarianceResult symmetry_invariance_check(const GroundStateBundle& b, const HoneycombLattice& lat, GroupElement g,
                                           const std::vector<XdOperator>& observables);

/// || u_g(L) omega - boundary_g(L) omega || for the defect-sector boundary unitary.
double boundary_excitation_check(const GroundStateBundle& b, const HoneycombLattice& lat,
                                 const RegionPartition& part, GroupElement g);

/// Dimension of the joint +1 eigenspace of the A_v and of the B_p not listed
/// in dropped_plaquettes, on the edge qubits. Computed as the trace of the
/// projector by enumerating products of the generators.
std::uint64_t ground_space_dimension(const HoneycombLattice& lat,
                                     const std::vector<PlaquetteId>& dropped_plaquettes = {});

struct IdentityAgreement {
  double max_distance = 0.0;
  std::size_t states = 0;
};

/// Applies both factor lists (rightmost first) to random states and
/// returns the largest distance between the results.
IdentityAgreement dense_identity_check(const std::vector<XdOperator>& lhs, const std::vector<XdOperator>& rhs,
                                       std::size_t n, std::size_t states, std::mt19937_64& rng,
                                       std::size_t max_qubits = kDefaultMaxQubits);

} // namespace setlab::oracle
