#include <gtest/gtest.h>

#include <map>
#include <set>

#include "setlab/lattice/loop.hpp"

using namespace setlab;

class TorusSizes : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(TorusSizes, CountsAndEuler) {
  const auto [l1, l2] = GetParam();
  const auto lat = HoneycombLattice::torus(l1, l2);
  const std::size_t cells = static_cast<std::size_t>(l1 * l2);
  EXPECT_EQ(lat.num_vertices(), 2 * cells);
  EXPECT_EQ(lat.num_edges(), 3 * cells);
  EXPECT_EQ(lat.num_plaquettes(), cells);
  EXPECT_EQ(lat.num_sites(), 5 * cells);
  for (VertexId v = 0; v < lat.num_vertices(); ++v) EXPECT_EQ(lat.star(v).size(), 3u);
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    EXPECT_EQ(lat.sublattice(lat.edge(e).a), Sublattice::A);
    EXPECT_EQ(lat.sublattice(lat.edge(e).b), Sublattice::B);
  }
}

TEST_P(TorusSizes, EveryEdgeBordersTwoPlaquetteSlots) {
  const auto [l1, l2] = GetParam();
  const auto lat = HoneycombLattice::torus(l1, l2);
  std::map<EdgeId, int> uses;
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    for (EdgeId e : lat.plaquette(p).edges) ++uses[e];
  }
  for (EdgeId e = 0; e < lat.num_edges(); ++e) EXPECT_EQ(uses[e], 2) << e;
}

TEST_P(TorusSizes, HexagonWalkIsClosed) {
  const auto [l1, l2] = GetParam();
  const auto lat = HoneycombLattice::torus(l1, l2);
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    const auto& pl = lat.plaquette(p);
    for (int k = 0; k < 6; ++k) {
      const Edge& e = lat.edge(pl.edges[k]);
      const VertexId u = pl.vertices[k], w = pl.vertices[(k + 1) % 6];
      EXPECT_TRUE((e.a == u && e.b == w) || (e.a == w && e.b == u)) << "plaquette " << p << " step " << k;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Lattice, TorusSizes,
                         ::testing::Values(std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 3},
                                           std::pair{4, 1}));

TEST(Honeycomb, PatchIsADisk) {
  for (auto [w, h] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    const auto lat = HoneycombLattice::patch(w, h);
    const auto chi = static_cast<long>(lat.num_vertices()) - static_cast<long>(lat.num_edges()) +
                     static_cast<long>(lat.num_plaquettes());
    EXPECT_EQ(chi, 1) << w << "x" << h;
    EXPECT_EQ(lat.num_plaquettes(), static_cast<std::size_t>(w * h));
    for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) EXPECT_TRUE(lat.plaquette_is_simple(p));
  }
  const auto one = HoneycombLattice::patch(1, 1);
  EXPECT_EQ(one.num_vertices(), 6u);
  EXPECT_EQ(one.num_edges(), 6u);
}

TEST(Honeycomb, OneByOneTorusPlaquetteIsDegenerate) {
  const auto lat = HoneycombLattice::torus(1, 1);
  EXPECT_FALSE(lat.plaquette_is_simple(0));
  EXPECT_THROW((void)Loop::around_plaquettes(lat, {0}), InvalidLoop);
}

TEST(Loop, HexagonPartition) {
  const auto lat = HoneycombLattice::torus(3, 3);
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    const auto part = loop_partition(lat, hexagon_loop(lat, p));
    EXPECT_TRUE(part.vertices(Zone::Interior).empty());
    EXPECT_EQ(part.vertices(Zone::Boundary).size(), 6u);
    EXPECT_EQ(part.edges(Zone::Boundary).size(), 6u);
    EXPECT_TRUE(part.edges(Zone::Interior).empty());
    EXPECT_EQ(part.closed_edges().size(), 6u);
  }
}

TEST(Loop, TwoHexagonsShareAChord) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const PlaquetteId p = *lat.plaquette_at({0, 0}), q = *lat.plaquette_at({1, 0});
  const Loop loop = Loop::around_plaquettes(lat, {p, q});
  const auto part = loop_partition(lat, loop);
  EXPECT_TRUE(loop.is_simple());
  EXPECT_EQ(loop.edges().size(), 10u);
  EXPECT_EQ(part.vertices(Zone::Boundary).size(), 10u);
  EXPECT_TRUE(part.vertices(Zone::Interior).empty());
  EXPECT_EQ(part.edges(Zone::Interior).size(), 1u);
}

TEST(Loop, NineHexagonBlockHasInterior) {
  const auto lat = HoneycombLattice::torus(5, 5);
  std::vector<PlaquetteId> ps;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) ps.push_back(*lat.plaquette_at({i, j}));
  }
  const auto part = loop_partition(lat, Loop::around_plaquettes(lat, ps));
  EXPECT_FALSE(part.vertices(Zone::Interior).empty());
  // every interior vertex has its whole star in the closed region
  for (VertexId v : part.vertices(Zone::Interior)) {
    for (EdgeId e : lat.star(v)) EXPECT_TRUE(part.edge_in_closure(e));
  }
  // every edge joining interior and exterior would be a contradiction
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    const auto za = part.vertex_zone[lat.edge(e).a], zb = part.vertex_zone[lat.edge(e).b];
    EXPECT_FALSE((za == Zone::Interior && zb == Zone::Exterior) || (za == Zone::Exterior && zb == Zone::Interior));
  }
}

TEST(Loop, InconsistentInteriorRejected) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const Loop hex = hexagon_loop(lat, 0);
  const VertexId outside = lat.other_endpoint(lat.star(lat.plaquette(4).vertices[0])[0], lat.plaquette(4).vertices[0]);
  std::set<VertexId> on_loop(lat.plaquette(0).vertices.begin(), lat.plaquette(0).vertices.end());
  if (!on_loop.count(outside)) {
    EXPECT_THROW((void)loop_partition(lat, Loop(lat, hex.edges(), {outside}, {})), InvalidLoop);
  }
}

TEST(Path, WalksAndRejections) {
  const auto lat = HoneycombLattice::torus(3, 3);
  const VertexId b = *lat.vertex_at({0, 0}, Sublattice::B);
  const auto path = path_from(lat, b, {Bond::Z, Bond::X, Bond::Z});
  EXPECT_EQ(path.edges.size(), 3u);
  EXPECT_EQ(path.vertices.size(), 4u);
  EXPECT_EQ(lat.sublattice(path.end()), Sublattice::A);
  EXPECT_THROW((void)path_from(lat, b, {Bond::Z, Bond::Z}), InvalidPath);
}
