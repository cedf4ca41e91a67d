#include <gtest/gtest.h>

#include <array>
#include <random>

#include "setlab/cohomology/classes.hpp"
#include "setlab/gcrossed/export.hpp"
#include "setlab/model/defect.hpp"
#include "setlab/model/wtable.hpp"
#include "setlab/oracle/state_vector.hpp"

using namespace setlab;
using cohomology::Phase;

namespace {

RegionPartition hexagon_region(const HoneycombLattice& lat, PlaquetteId p) {
  return loop_partition(lat, hexagon_loop(lat, p));
}

RegionPartition two_hexagon_region(const HoneycombLattice& lat) {
  return loop_partition(lat, Loop::around_plaquettes(lat, {*lat.plaquette_at({0, 0}), *lat.plaquette_at({1, 0})}));
}

/// s with a b a^-1 b^-1 = s I, measured on a random dense state.
int dense_commutator_sign(const XdOperator& a, const XdOperator& b, std::size_t n, std::mt19937_64& rng) {
  const auto psi = oracle::StateVector::random(n, rng);
  const auto out = oracle::apply_product({a, b, a.inverse(), b.inverse()}, psi);
  if (out.distance(psi) < 1e-12) return 1;
  auto neg = psi;
  for (auto& x : neg.amplitudes()) x = -x;
  if (out.distance(neg) < 1e-12) return -1;
  return 0;
}

/// 2x2 integer matrices on the qubit v0: W entries are +-I or +-Z there.
using M2 = std::array<std::array<int, 2>, 2>;

M2 m2_mul(const M2& a, const M2& b) {
  M2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return c;
}

M2 m2_of(const WEntry& w, SiteId v0) {
  const int s = w.phase.sign();
  if (w.op == XdOperator::identity()) return {{{s, 0}, {0, s}}};
  if (w.op == XdOperator::minus_identity()) return {{{-s, 0}, {0, -s}}};
  if (w.op == XdOperator::pauli_z(v0)) return {{{s, 0}, {0, -s}}};
  if (w.op == XdOperator::pauli_z(v0).negated()) return {{{-s, 0}, {0, s}}};
  ADD_FAILURE() << "unexpected W entry " << w.op.to_string();
  return {};
}

} // namespace

class RestrictionIdentity : public ::testing::TestWithParam<int> {};

TEST_P(RestrictionIdentity, HexagonAndTwoHexagonLoops) {
  const auto lat = HoneycombLattice::torus(GetParam(), GetParam());
  const auto full = entangler_full(lat);
  for (const auto& part : {hexagon_region(lat, 0), two_hexagon_region(lat)}) {
    for (Sublattice s : {Sublattice::A, Sublattice::B}) {
      const auto r = verify_restriction_identity(lat, part, full, s);
      EXPECT_TRUE(r.pass) << r.residual.to_string();
      EXPECT_TRUE(r.missed.empty());
      // Boundary vertices also need the factors on their outward edges.
      const auto region_only = verify_restriction_identity(lat, part, entangler_region(lat, part), s);
      EXPECT_FALSE(region_only.pass);
      EXPECT_FALSE(region_only.missed.empty());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Tori, RestrictionIdentity, ::testing::Values(2, 3, 4));

TEST(RestrictionIdentity, MissingFactorIsReported) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const auto part = hexagon_region(lat, 4);
  const auto u = ua_restriction(lat, part);
  EdgeId dropped = lat.num_edges();
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    if (dropped == lat.num_edges() && std::binary_search(u.support.begin(), u.support.end(), lat.edge(e).a)) {
      dropped = e;
      continue;
    }
    keep.push_back(e);
  }
  ASSERT_LT(dropped, lat.num_edges());
  const auto r = verify_restriction_identity(lat, part, entangler_edges(lat, keep), Sublattice::A);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.missed, std::vector<EdgeId>{dropped});
}

TEST(RestrictionIdentity, HoldsOnDenseStates) {
  const auto lat = HoneycombLattice::torus(2, 2);
  const auto part = hexagon_region(lat, 0);
  const auto full = entangler_full(lat);
  const auto u = ua_restriction(lat, part).op;
  const auto w = boundary_w(lat, part, Sublattice::A);
  std::vector<XdOperator> lhs{u}, rhs{w.w};
  lhs.insert(lhs.end(), full.factors.begin(), full.factors.end());
  rhs.insert(rhs.end(), full.factors.begin(), full.factors.end());
  rhs.push_back(u);
  std::mt19937_64 rng(11);
  const auto psi = oracle::StateVector::random(lat.num_sites(), rng);
  EXPECT_LT(oracle::apply_product(lhs, psi).distance(oracle::apply_product(rhs, psi)), 1e-12);
}

TEST(BoundaryW, SplitsIntoFullStarsAndRemainder) {
  const auto lat = HoneycombLattice::torus(4, 4);
  const auto part = two_hexagon_region(lat);
  const auto w = boundary_w(lat, part, Sublattice::A);
  EXPECT_EQ(w.w, w.w1 * w.w2);
  XdOperator stars;
  for (VertexId v : w.full_star_vertices) {
    // The CZ factors at a full-star vertex are the controlled star there.
    stars *= controlled_star(lat, v);
  }
  EXPECT_EQ(stars, w.w1);
}

TEST(Strings, BraidSignsMatchDenseCommutator) {
  const auto lat = HoneycombLattice::torus(2, 2);
  const auto reps = default_representatives(lat);
  const auto data = gcrossed::anyon_data_from_strings(reps);
  std::mt19937_64 rng(12);
  const int cross = dense_commutator_sign(reps[Anyon::EX].op, reps[Anyon::EZ].op, lat.num_sites(), rng);
  EXPECT_EQ(cross, -1);
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    for (std::size_t b = 0; b < kNumAnyons; ++b) {
      const bool x = a & 1, z = b & 2;
      EXPECT_EQ(data.braid[a][b], Phase::from_sign(x && z ? cross : 1)) << a << "," << b;
    }
  }
  EXPECT_EQ(data.braid[3][3], Phase::minus_one());
}

TEST(Strings, FusionMultipliesRepresentatives) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const auto reps = default_representatives(lat);
  EXPECT_EQ(reps[Anyon::F].op, reps[Anyon::EX].op * reps[Anyon::EZ].op);
  EXPECT_EQ(crossing_edges(reps.x_path, reps.z_edges), 1u);
  const auto [label, op] = fuse_strings(reps, Anyon::EX, Anyon::F);
  EXPECT_EQ(label, Anyon::EZ);
  EXPECT_EQ(lat.sublattice(reps.v0()), Sublattice::B);
  EXPECT_EQ(lat.sublattice(reps.x_path.end()), Sublattice::A);
}

TEST(Strings, EndpointFactorsAreLocal) {
  const auto lat = HoneycombLattice::torus(6, 6);
  std::mt19937_64 rng(13);
  const auto bverts = lat.vertices_of(Sublattice::B);
  int paths = 0;
  while (paths < 25) {
    std::vector<Bond> steps(1 + rng() % 8);
    for (auto& s : steps) s = static_cast<Bond>(rng() % 3);
    EdgePath path;
    try {
      path = path_from(lat, bverts[rng() % bverts.size()], steps);
    } catch (const InvalidPath&) {
      continue;
    }
    ++paths;
    const auto s = dressed_x_string(lat, path).op;
    for (GroupElement g = 0; g < kGroupOrder; ++g) {
      const auto factors = symmetry_endpoint_action(lat, g, s, {path.start(), path.end()});
      XdOperator prod;
      for (const auto& f : factors) {
        EXPECT_TRUE(support_outside(f.op, thickened_sites(lat, {f.endpoint}, 1)).empty());
        prod *= f.op;
      }
      EXPECT_EQ(prod, beta(lat, g, s) * s.inverse());
    }
  }
}

TEST(Strings, NonLocalDefectIsReported) {
  const auto lat = HoneycombLattice::torus(6, 6);
  const auto path = path_from(lat, lat.vertices_of(Sublattice::B).front(), {Bond::Z, Bond::X, Bond::Z});
  const auto s = dressed_x_string(lat, path).op;
  // With only the far endpoint allowed, the factor at the start has nowhere to go.
  EXPECT_THROW((void)symmetry_endpoint_action(lat, kAB, s, {path.end()}), NonLocalDefect);
}

class WTableTest : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(WTableTest, OmegaMatchesDenseComputation) {
  const auto [l1, l2] = GetParam();
  const auto lat = HoneycombLattice::torus(l1, l2);
  const auto reps = default_representatives(lat);
  const auto w = w_table_example(lat, reps);
  const SiteId v0 = lat.vertex_site(reps.v0());
  EXPECT_EQ(w.at(Anyon::EX, kE).op, XdOperator::identity());
  EXPECT_EQ(w.at(Anyon::EX, kA).op, XdOperator::pauli_z(v0));
  EXPECT_EQ(w.at(Anyon::EX, kB).op, XdOperator::identity());
  EXPECT_EQ(w.at(Anyon::EX, kAB).op, XdOperator::pauli_z(v0).negated());

  const auto omega = omega_table(lat, w);
  const bool v0_flipped[4] = {false, flips(kA, lat.sublattice(reps.v0())), flips(kB, lat.sublattice(reps.v0())),
                              flips(kAB, lat.sublattice(reps.v0()))};
  const M2 x{{{0, 1}, {1, 0}}};
  auto dag = [](M2 m) {
    std::swap(m[0][1], m[1][0]);
    return m;
  };
  for (std::size_t a = 0; a < kNumAnyons; ++a) {
    for (GroupElement g = 0; g < kGroupOrder; ++g) {
      for (GroupElement h = 0; h < kGroupOrder; ++h) {
        const auto wa = [&](GroupElement k) { return m2_of(w.w[a][k], v0); };
        M2 bh = dag(wa(h));
        if (v0_flipped[g]) bh = m2_mul(x, m2_mul(bh, x));
        const M2 prod = m2_mul(dag(wa(g)), m2_mul(bh, wa(g ^ h)));
        ASSERT_EQ(prod[0][1], 0);
        ASSERT_EQ(prod[0][0], prod[1][1]) << "not a scalar";
        EXPECT_EQ(omega(a, g, h), Phase::from_sign(prod[0][0])) << a << " " << g << " " << h;
      }
    }
  }
  const int expected[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, 1, 1, 1}, {1, 1, -1, -1}};
  for (GroupElement g = 0; g < kGroupOrder; ++g) {
    for (GroupElement h = 0; h < kGroupOrder; ++h) {
      EXPECT_EQ(omega(1, g, h), Phase::from_sign(expected[g][h]));
      EXPECT_EQ(omega(3, g, h), omega(1, g, h) + omega(2, g, h));
      EXPECT_TRUE(omega(0, g, h).is_one());
      EXPECT_TRUE(omega(2, g, h).is_one());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Tori, WTableTest,
                         ::testing::Values(std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 4}, std::pair{5, 3}));

TEST(WTable, PatchReproducesTheSameOmega) {
  for (int k : {1, 3}) {
    const auto lat = HoneycombLattice::patch(k, k);
    const auto torus_omega = omega_table(HoneycombLattice::torus(3, 3),
                                         w_table_example(HoneycombLattice::torus(3, 3),
                                                         default_representatives(HoneycombLattice::torus(3, 3))));
    EXPECT_EQ(omega_table(lat, w_table_example(lat, default_representatives(lat))), torus_omega) << k;
  }
}

TEST(WTable, EvenPathGivesCohomologousTable) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const SetModel model(lat);
  const auto def = default_representatives(lat);
  const auto path = path_from(lat, def.v0(), {Bond::Z, Bond::X});
  const auto reps = make_representatives(lat, path, {path.edges.front()});
  const auto omega = omega_table(lat, w_table_example(lat, reps));
  const auto omega_default = omega_table(lat, w_table_example(lat, def));
  const auto c = cohomology::cohomologous(eta_from_omega(omega_default, model.module()),
                                          eta_from_omega(omega, model.module()), model.module());
  EXPECT_EQ(c.answer, cohomology::Answer::Yes);
}

TEST(WTable, RephasingShiftsEtaByCoboundary) {
  const auto lat = HoneycombLattice::torus(2, 2);
  const SetModel model(lat);
  const auto w = w_table_example(lat, default_representatives(lat));
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    auto l = cohomology::Cochain1::constant(kNumAnyons, kGroupOrder);
    for (auto& row : l.values) {
      for (auto& p : row) p = Phase(static_cast<std::int64_t>(rng() % 8), 8);
    }
    const auto d = coboundary_from_rephasing(lat, l, w, model.module());
    EXPECT_EQ(d, cohomology::coboundary(l, model.module()));
    const auto eta2 = eta_from_omega(omega_table(lat, rephase(w, l)), model.module());
    EXPECT_TRUE(cohomology::cocycle2_check(eta2, model.module()).pass);
  }
}

TEST(YOperator, IdentityHoldsAndDetectsWrongOmega) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const auto reps = default_representatives(lat);
  const auto w = w_table_example(lat, reps);
  const auto omega = omega_table(lat, w);
  const auto ok = y_operator_check(lat, reps, w, omega);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.instances, kNumAnyons * kNumAnyons * kGroupOrder * kGroupOrder);
  const auto bad = y_operator_check(lat, reps, w, cohomology::OmegaTable::constant(kNumAnyons, kGroupOrder));
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.failures.empty());
}

TEST(DefectSector, ActsAsSymmetryInsideAndTriviallyOutside) {
  const auto lat = HoneycombLattice::torus(4, 4);
  for (const auto& part : {hexagon_region(lat, 5), two_hexagon_region(lat)}) {
    for (GroupElement g : {kA, kB, kAB}) {
      const auto sector = defect_sector(lat, part, g);
      const auto c = check_defect_sector(lat, sector);
      EXPECT_TRUE(c.pass()) << element_name(g);
      EXPECT_EQ(c.generators, 2 * lat.num_sites());
      const auto x = XdOperator::pauli_x(lat.edge_site(0));
      EXPECT_EQ(sector.apply_inverse(sector.apply(x)), x);
    }
  }
}

TEST(DefectSector, BoundaryUnitaryChecksOnLargeTorus) {
  const auto lat = HoneycombLattice::torus(6, 6);
  auto block = [&](int r) {
    std::vector<PlaquetteId> out;
    for (int i = 2 - r; i <= 2 + r; ++i) {
      for (int j = 2 - r; j <= 2 + r; ++j) out.push_back(*lat.plaquette_at({i, j}));
    }
    return out;
  };
  for (GroupElement g : {kA, kB, kAB}) {
    const auto r = boundary_unitary_check(lat, g, block(0), {*lat.plaquette_at({2, 2}), *lat.plaquette_at({3, 2})},
                                          {block(1), block(2)});
    EXPECT_TRUE(r.pass()) << element_name(g);
    ASSERT_EQ(r.items.size(), 4u);
    EXPECT_TRUE(r.items[0].deferred);
  }
}

TEST(DefectSector, RejectsNonNestedRegions) {
  const auto lat = HoneycombLattice::torus(6, 6);
  EXPECT_THROW((void)boundary_unitary_check(lat, kA, {*lat.plaquette_at({2, 2})}, {*lat.plaquette_at({4, 4})}, {}),
               std::invalid_argument);
}
