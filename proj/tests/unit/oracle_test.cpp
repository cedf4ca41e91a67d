#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "setlab/model/defect.hpp"
#include "setlab/oracle/checks.hpp"
#include "unit/support.hpp"

using namespace setlab;
using namespace setlab::oracle;

namespace {

std::vector<std::uint8_t> bits_of(std::uint64_t z, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((z >> i) & 1U);
  return out;
}

std::uint64_t index_of(const std::vector<std::uint8_t>& bits) {
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) z |= static_cast<std::uint64_t>(bits[i]) << i;
  return z;
}

/// Trace of prod (1 + S)/2 over the listed stabilizers on n qubits, by
/// projecting every basis vector.
double dense_projector_trace(const std::vector<XdOperator>& stabilizers, std::size_t n) {
  double trace = 0.0;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t z = 0; z < dim; ++z) {
    auto s = StateVector::basis(n, z);
    for (const auto& op : stabilizers) project_plus(op, s);
    trace += s[z].real();
  }
  return trace;
}

std::vector<XdOperator> edge_stabilizers(const HoneycombLattice& lat, const std::vector<PlaquetteId>& dropped = {}) {
  std::vector<XdOperator> out;
  for (VertexId v = 0; v < lat.num_vertices(); ++v) out.push_back(vertex_op(lat, v));
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    if (std::find(dropped.begin(), dropped.end(), p) == dropped.end()) out.push_back(plaquette_op(lat, p));
  }
  return out;
}

} // namespace

TEST(StateVector, ApplyMatchesBasisActionExhaustively) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto op = setlab::testing::random_op(rng, static_cast<SiteId>(n));
      const auto compiled = compile(op, n);
      for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
        const auto [bits, sign] = apply_to_basis(op, bits_of(z, n));
        const auto out = apply_xd(compiled, StateVector::basis(n, z));
        const std::uint64_t target = index_of(bits);
        ASSERT_DOUBLE_EQ(out[target].real(), sign);
        ASSERT_DOUBLE_EQ(out.norm(), 1.0);
      }
    }
  }
}

TEST(StateVector, ProductsAndNorms) {
  std::mt19937_64 rng(22);
  const std::size_t n = 12;
  for (int t = 0; t < 20; ++t) {
    const auto a = setlab::testing::random_op(rng, n), b = setlab::testing::random_op(rng, n);
    const auto psi = StateVector::random(n, rng);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    const auto ab = apply_xd(a * b, psi);
    EXPECT_LT(ab.distance(apply_xd(a, apply_xd(b, psi))), 1e-12);
    EXPECT_LT(ab.distance(apply_product({a, b}, psi)), 1e-12);
    EXPECT_NEAR(ab.norm(), 1.0, 1e-12);
    EXPECT_LT(apply_xd(a.inverse(), apply_xd(a, psi)).distance(psi), 1e-12);
    const auto e = expectation(a, psi);
    EXPECT_NEAR(e.real(), psi.inner(apply_xd(a, psi)).real(), 1e-12);
  }
}

TEST(StateVector, RandomIsSeedDeterministic) {
  std::mt19937_64 r1(5), r2(5);
  EXPECT_EQ(StateVector::random(8, r1).amplitudes(), StateVector::random(8, r2).amplitudes());
}

TEST(StateVector, QubitGuard) {
  EXPECT_THROW(StateVector(kDefaultMaxQubits + 1), QubitLimitExceeded);
  EXPECT_THROW(StateVector(10, 8), QubitLimitExceeded);
  EXPECT_THROW((void)ground_state(HoneycombLattice::torus(3, 3)), QubitLimitExceeded);
  EXPECT_THROW((void)compile(XdOperator::pauli_x(12), 12), SizeMismatch);
}

TEST(StateVector, DumpRoundTrip) {
  std::mt19937_64 rng(23);
  const auto psi = StateVector::random(9, rng);
  const auto path = std::filesystem::temp_directory_path() / "setlab_dump_test.bin";
  write_state(path, psi);
  EXPECT_EQ(std::filesystem::file_size(path), 16u + 16u * 512u);
  const auto back = read_state(path);
  EXPECT_EQ(back.amplitudes(), psi.amplitudes());
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.write("XXXX", 4);
  }
  EXPECT_THROW((void)read_state(path), std::runtime_error);
  std::filesystem::remove(path);
}

TEST(GroundState, StabilizedOnSmallLattices) {
  for (const auto& lat : {HoneycombLattice::torus(2, 2), HoneycombLattice::patch(1, 1), HoneycombLattice::patch(2, 1)}) {
    const auto b = ground_state(lat);
    EXPECT_LT(stabilizer_deviation(b), 1e-12);
    EXPECT_NEAR(b.omega.norm(), 1.0, 1e-12);
    // The entangled stabilizers fix omega.
    const SetModel model(lat);
    for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
      EXPECT_NEAR(expectation(model.alpha(plaquette_op(lat, p)), b.omega).real(), 1.0, 1e-12);
    }
  }
}

TEST(GroundState, SymmetryInvarianceOnPatch) {
  const auto lat = HoneycombLattice::patch(1, 1);
  const auto b = ground_state(lat);
  std::mt19937_64 rng(24);
  const auto obs = random_local_observables(lat, 60, rng);
  for (GroupElement g : {kA, kB, kAB}) {
    const auto r = symmetry_invariance_check(b, lat, g, obs);
    EXPECT_LT(r.max_deviation, 1e-10);
    EXPECT_EQ(r.samples, 60u);
    EXPECT_GT(r.nonzero, 0u);
  }
}

TEST(GroundState, BoundaryExcitationOnPatch) {
  const auto lat = HoneycombLattice::patch(2, 1);
  const auto b = ground_state(lat);
  const auto part = loop_partition(lat, hexagon_loop(lat, 0));
  for (GroupElement g : {kA, kB, kAB}) EXPECT_LT(boundary_excitation_check(b, lat, part, g), 1e-10);
}

TEST(GroundSpace, DimensionsMatchDenseTrace) {
  const auto torus = HoneycombLattice::torus(2, 2);
  const auto patch = HoneycombLattice::patch(1, 1);
  const auto wide = HoneycombLattice::patch(2, 1);
  EXPECT_EQ(ground_space_dimension(torus), 4u);
  EXPECT_EQ(ground_space_dimension(patch), 1u);
  EXPECT_EQ(ground_space_dimension(wide), 1u);
  // On a torus the plaquettes multiply to I, so one of them is redundant.
  EXPECT_EQ(ground_space_dimension(torus, {0}), 4u);
  EXPECT_EQ(ground_space_dimension(torus, {0, 1}), 8u);
  EXPECT_EQ(ground_space_dimension(patch, {0}), 2u);
  EXPECT_EQ(ground_space_dimension(HoneycombLattice::torus(3, 2)), 4u);
  EXPECT_EQ(ground_space_dimension(HoneycombLattice::torus(4, 1)), 4u);
  EXPECT_THROW((void)ground_space_dimension(HoneycombLattice::torus(3, 3)), QubitLimitExceeded);

  EXPECT_NEAR(dense_projector_trace(edge_stabilizers(torus), torus.num_edges()), 4.0, 1e-9);
  EXPECT_NEAR(dense_projector_trace(edge_stabilizers(torus, {0}), torus.num_edges()), 4.0, 1e-9);
  EXPECT_NEAR(dense_projector_trace(edge_stabilizers(torus, {0, 1}), torus.num_edges()), 8.0, 1e-9);
  EXPECT_NEAR(dense_projector_trace(edge_stabilizers(patch, {0}), patch.num_edges()), 2.0, 1e-9);
  EXPECT_NEAR(dense_projector_trace(edge_stabilizers(patch), patch.num_edges()), 1.0, 1e-9);
  EXPECT_NEAR(dense_projector_trace(edge_stabilizers(wide), wide.num_edges()), 1.0, 1e-9);
}

TEST(IdentityAgreement, DetectsMismatch) {
  std::mt19937_64 rng(25);
  const auto x = XdOperator::pauli_x(0), z = XdOperator::pauli_z(0);
  EXPECT_LT(dense_identity_check({x, z}, {z, x, XdOperator::minus_identity()}, 4, 5, rng).max_distance, 1e-12);
  EXPECT_GT(dense_identity_check({x, z}, {z, x}, 4, 5, rng).max_distance, 0.1);
}
