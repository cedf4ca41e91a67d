#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "setlab/algebra/phase_poly.hpp"

namespace setlab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using PlaquetteId = std::uint32_t;

enum class Sublattice : std::uint8_t { A, B };

/// Bond orientation in the brick-wall embedding.
enum class Bond : std::uint8_t { X = 0, Y = 1, Z = 2 };

enum class LatticeKind : std::uint8_t { Torus, Patch };

struct Cell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Vertex {
  Sublattice sublattice;
  Cell cell;
  /// Incident edge per bond direction; absent on open boundaries.
  std::array<std::optional<EdgeId>, 3> bonds;
};

struct Edge {
  VertexId a; // endpoint in sublattice A
  VertexId b; // endpoint in sublattice B
  Bond bond;
  Cell cell; // cell of the A endpoint
};

/// Six edges and six vertices walked around the hexagon. On a 1-cell-wide
/// torus the walk revisits sites; see HoneycombLattice::plaquette_is_simple.
struct Plaquette {
  Cell cell;
  std::array<VertexId, 6> vertices;
  std::array<EdgeId, 6> edges;
};

/// Finite honeycomb lattice in the brick-wall embedding.
///
/// Unit cell (i,j) holds A(i,j) and B(i,j). Every edge is owned by its A
/// endpoint: Z joins A(i,j)-B(i,j), X joins A(i,j)-B(i-1,j), Y joins
/// A(i,j)-B(i,j-1). Plaquette (i,j) is the hexagon
/// A(i,j) B(i,j) A(i+1,j) B(i+1,j-1) A(i+1,j-1) B(i,j-1).
///
/// Qubit sites: edges take SiteIds 0..E-1, vertices take E..E+V-1.
class HoneycombLattice {
public:
  static HoneycombLattice torus(int l1, int l2);
  static HoneycombLattice patch(int w, int h);

  [[nodiscard]] LatticeKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::array<int, 2> size() const noexcept { return size_; }
  [[nodiscard]] std::string describe() const;

  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] std::size_t num_plaquettes() const noexcept { return plaquettes_.size(); }
  [[nodiscard]] std::size_t num_sites() const noexcept { return edges_.size() + vertices_.size(); }

  [[nodiscard]] const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] const Plaquette& plaquette(PlaquetteId p) const { return plaquettes_.at(p); }

  [[nodiscard]] SiteId edge_site(EdgeId e) const { return e; }
  [[nodiscard]] SiteId vertex_site(VertexId v) const {
    return static_cast<SiteId>(edges_.size() + v);
  }
  [[nodiscard]] bool is_edge_site(SiteId s) const { return s < edges_.size(); }
  [[nodiscard]] bool is_vertex_site(SiteId s) const { return s >= edges_.size() && s < num_sites(); }
  [[nodiscard]] VertexId site_vertex(SiteId s) const {
    return static_cast<VertexId>(s - edges_.size());
  }

  [[nodiscard]] Sublattice sublattice(VertexId v) const { return vertices_.at(v).sublattice; }
  /// Edges incident to v, s(v). Three on a torus.
  [[nodiscard]] std::vector<EdgeId> star(VertexId v) const;
  [[nodiscard]] VertexId other_endpoint(EdgeId e, VertexId v) const;
  [[nodiscard]] std::vector<VertexId> vertices_of(Sublattice s) const;
  /// Edges listed once each (a hexagon on a 1-wide torus repeats edges).
  [[nodiscard]] std::vector<EdgeId> plaquette_edges(PlaquetteId p) const;
  [[nodiscard]] std::vector<VertexId> plaquette_vertices(PlaquetteId p) const;
  [[nodiscard]] bool plaquette_is_simple(PlaquetteId p) const;
  /// Plaquette at a cell, if present.
  [[nodiscard]] std::optional<PlaquetteId> plaquette_at(Cell c) const;
  [[nodiscard]] std::optional<VertexId> vertex_at(Cell c, Sublattice s) const;
  /// Vertices within graph distance r of the seeds (seeds included).
  [[nodiscard]] std::vector<VertexId> vertex_ball(const std::vector<VertexId>& seeds, int r) const;

private:
  HoneycombLattice() = default;
  void link_bonds();
  void build_plaquettes(const std::vector<Cell>& cells);

  LatticeKind kind_ = LatticeKind::Torus;
  std::array<int, 2> size_{0, 0};
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Plaquette> plaquettes_;
  std::map<std::pair<Cell, Sublattice>, VertexId> vertex_index_;
  std::map<std::pair<Cell, Bond>, EdgeId> edge_index_;
  std::map<Cell, PlaquetteId> plaquette_index_;

  [[nodiscard]] Cell wrap(Cell c) const;
  [[nodiscard]] std::optional<EdgeId> edge_at(Cell c, Bond b) const;
};

} // namespace setlab
