#include "setlab/lattice/honeycomb.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace setlab {

namespace {

// Offset from an A vertex to the B endpoint of each bond.
constexpr std::array<Cell, 3> kBondOffset{Cell{-1, 0}, Cell{0, -1}, Cell{0, 0}};

Cell add(Cell a, Cell b) { return {a.i + b.i, a.j + b.j}; }

// Hexagon walk from A(c): vertex offsets and (owning cell offset, bond) of
// the edge leaving each vertex.
struct HexStep {
  Cell vertex_offset;
  Sublattice sublattice;
  Cell edge_offset;
  Bond bond;
};
constexpr std::array<HexStep, 6> kHexWalk{{
    {{0, 0}, Sublattice::A, {0, 0}, Bond::Z},
    {{0, 0}, Sublattice::B, {1, 0}, Bond::X},
    {{1, 0}, Sublattice::A, {1, 0}, Bond::Y},
    {{1, -1}, Sublattice::B, {1, -1}, Bond::Z},
    {{1, -1}, Sublattice::A, {1, -1}, Bond::X},
    {{0, -1}, Sublattice::B, {0, 0}, Bond::Y},
}};

} // namespace

Cell HoneycombLattice::wrap(Cell c) const {
  if (kind_ == LatticeKind::Patch) return c;
  auto mod = [](int a, int n) { return ((a % n) + n) % n; };
  return {mod(c.i, size_[0]), mod(c.j, size_[1])};
}

std::optional<EdgeId> HoneycombLattice::edge_at(Cell c, Bond b) const {
  auto it = edge_index_.find({wrap(c), b});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> HoneycombLattice::vertex_at(Cell c, Sublattice s) const {
  auto it = vertex_index_.find({wrap(c), s});
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PlaquetteId> HoneycombLattice::plaquette_at(Cell c) const {
  auto it = plaquette_index_.find(wrap(c));
  if (it == plaquette_index_.end()) return std::nullopt;
  return it->second;
}

HoneycombLattice HoneycombLattice::torus(int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("torus: cell counts must be >= 1");
  HoneycombLattice lat;
  lat.kind_ = LatticeKind::Torus;
  lat.size_ = {l1, l2};
  std::vector<Cell> cells;
  for (int i = 0; i < l1; ++i) {
    for (int j = 0; j < l2; ++j) {
      const Cell c{i, j};
      cells.push_back(c);
      for (Sublattice s : {Sublattice::A, Sublattice::B}) {
        lat.vertex_index_[{c, s}] = static_cast<VertexId>(lat.vertices_.size());
        lat.vertices_.push_back({s, c, {}});
      }
    }
  }
  for (const Cell c : cells) {
    for (Bond b : {Bond::X, Bond::Y, Bond::Z}) {
      const VertexId a = *lat.vertex_at(c, Sublattice::A);
      const VertexId bv = *lat.vertex_at(add(c, kBondOffset[static_cast<int>(b)]), Sublattice::B);
      lat.edge_index_[{c, b}] = static_cast<EdgeId>(lat.edges_.size());
      lat.edges_.push_back({a, bv, b, c});
    }
  }
  lat.link_bonds();
  lat.build_plaquettes(cells);
  return lat;
}

HoneycombLattice HoneycombLattice::patch(int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("patch: size must be >= 1");
  HoneycombLattice lat;
  lat.kind_ = LatticeKind::Patch;
  lat.size_ = {w, h};
  std::set<std::pair<Cell, Sublattice>> vkeys;
  std::set<std::pair<Cell, Bond>> ekeys;
  std::vector<Cell> cells;
  for (int i = 0; i < w; ++i) {
    for (int j = 0; j < h; ++j) {
      const Cell c{i, j};
      cells.push_back(c);
      for (const auto& step : kHexWalk) {
        vkeys.insert({add(c, step.vertex_offset), step.sublattice});
        ekeys.insert({add(c, step.edge_offset), step.bond});
      }
    }
  }
  for (const auto& key : vkeys) {
    lat.vertex_index_[key] = static_cast<VertexId>(lat.vertices_.size());
    lat.vertices_.push_back({key.second, key.first, {}});
  }
  for (const auto& [c, b] : ekeys) {
    const VertexId a = *lat.vertex_at(c, Sublattice::A);
    const VertexId bv = *lat.vertex_at(add(c, kBondOffset[static_cast<int>(b)]), Sublattice::B);
    lat.edge_index_[{c, b}] = static_cast<EdgeId>(lat.edges_.size());
    lat.edges_.push_back({a, bv, b, c});
  }
  lat.link_bonds();
  lat.build_plaquettes(cells);
  return lat;
}

void HoneycombLattice::link_bonds() {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    const auto slot = static_cast<std::size_t>(ed.bond);
    vertices_[ed.a].bonds[slot] = e;
    vertices_[ed.b].bonds[slot] = e;
  }
}

void HoneycombLattice::build_plaquettes(const std::vector<Cell>& cells) {
  for (const Cell c : cells) {
    Plaquette p{c, {}, {}};
    for (std::size_t k = 0; k < kHexWalk.size(); ++k) {
      const auto& step = kHexWalk[k];
      p.vertices[k] = *vertex_at(add(c, step.vertex_offset), step.sublattice);
      p.edges[k] = *edge_at(add(c, step.edge_offset), step.bond);
    }
    plaquette_index_[c] = static_cast<PlaquetteId>(plaquettes_.size());
    plaquettes_.push_back(p);
  }
}

std::string HoneycombLattice::describe() const {
  return std::string(kind_ == LatticeKind::Torus ? "torus " : "patch ") +
         std::to_string(size_[0]) + "x" + std::to_string(size_[1]);
}

std::vector<EdgeId> HoneycombLattice::star(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& e : vertices_.at(v).bonds) {
    if (e) out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexId HoneycombLattice::other_endpoint(EdgeId e, VertexId v) const {
  const auto& ed = edges_.at(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw std::invalid_argument("other_endpoint: vertex not on edge");
}

std::vector<VertexId> HoneycombLattice::vertices_of(Sublattice s) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].sublattice == s) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> HoneycombLattice::plaquette_edges(PlaquetteId p) const {
  const auto& pl = plaquettes_.at(p);
  std::vector<EdgeId> out(pl.edges.begin(), pl.edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> HoneycombLattice::plaquette_vertices(PlaquetteId p) const {
  const auto& pl = plaquettes_.at(p);
  std::vector<VertexId> out(pl.vertices.begin(), pl.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool HoneycombLattice::plaquette_is_simple(PlaquetteId p) const {
  return plaquette_vertices(p).size() == 6 && plaquette_edges(p).size() == 6;
}

std::vector<VertexId> HoneycombLattice::vertex_ball(const std::vector<VertexId>& seeds, int r) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<VertexId> queue;
  for (VertexId v : seeds) {
    if (dist.at(v) < 0) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] >= r) continue;
    for (EdgeId e : star(v)) {
      const VertexId u = other_endpoint(e, v);
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (dist[v] >= 0) out.push_back(v);
  }
  return out;
}

} // namespace setlab
