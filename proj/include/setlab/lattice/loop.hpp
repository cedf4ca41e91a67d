#pragma once

#include <stdexcept>
#include <vector>

#include "setlab/lattice/honeycomb.hpp"

namespace setlab {

class InvalidLoop : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Zone : std::uint8_t { Interior, Boundary, Exterior };

/// Vertex and edge zones relative to a loop.
///
/// Boundary edges are the loop edges. An edge off the loop is interior when
/// it touches an interior vertex or is one of the loop's explicit interior
/// chords (edges whose two endpoints both sit on the loop but which lie
/// inside it); every other edge is exterior.
struct RegionPartition {
  std::vector<Zone> vertex_zone;
  std::vector<Zone> edge_zone;

  [[nodiscard]] std::vector<VertexId> vertices(Zone z) const;
  [[nodiscard]] std::vector<EdgeId> edges(Zone z) const;
  /// V_int union V_bd
  [[nodiscard]] std::vector<VertexId> closed_vertices() const;
  /// E_int union E_bd
  [[nodiscard]] std::vector<EdgeId> closed_edges() const;
  [[nodiscard]] bool vertex_in_closure(VertexId v) const { return vertex_zone.at(v) != Zone::Exterior; }
  [[nodiscard]] bool edge_in_closure(EdgeId e) const { return edge_zone.at(e) != Zone::Exterior; }
};

/// A closed edge boundary together with the region it encloses.
///
/// Every vertex meets either zero or two loop edges. Boundaries made of
/// several disjoint cycles are accepted (two hexagons on a 2x2 torus bound
/// such a region); is_simple() reports whether the loop is a single cycle.
/// The interior is always explicit: the builders below derive it from
/// plaquettes or, on patches, by flood fill.
class Loop {
public:
  /// Validates the boundary and the interior against the lattice.
  Loop(const HoneycombLattice& lat, std::vector<EdgeId> edges, std::vector<VertexId> interior_vertices,
       std::vector<EdgeId> interior_chords);

  /// Boundary of a set of plaquettes; interior = everything the plaquettes
  /// cover that is not on the boundary.
  static Loop around_plaquettes(const HoneycombLattice& lat, std::vector<PlaquetteId> plaquettes);
  static Loop hexagon(const HoneycombLattice& lat, PlaquetteId p);
  /// Patch only: derives the interior by flooding faces from the open edge
  /// of the patch. Throws on a torus.
  static Loop flood_filled(const HoneycombLattice& lat, std::vector<EdgeId> edges);

  /// Loop edges in walk order (cycle after cycle).
  [[nodiscard]] const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<VertexId>& interior_vertices() const noexcept { return interior_vertices_; }
  [[nodiscard]] const std::vector<EdgeId>& interior_chords() const noexcept { return interior_chords_; }
  [[nodiscard]] std::size_t num_cycles() const noexcept { return cycles_; }
  [[nodiscard]] bool is_simple() const noexcept { return cycles_ == 1; }

private:
  std::vector<EdgeId> edges_;
  std::vector<VertexId> interior_vertices_;
  std::vector<EdgeId> interior_chords_;
  std::size_t cycles_ = 0;
};

/// Throws InvalidLoop when the interior is inconsistent, e.g. an edge that
/// joins an interior vertex to an exterior one.
RegionPartition loop_partition(const HoneycombLattice& lat, const Loop& loop);

Loop hexagon_loop(const HoneycombLattice& lat, PlaquetteId p);

/// Edge sets of plaquettes of a region counted with multiplicity 1 or 2.
struct PlaquetteRegionEdges {
  std::vector<EdgeId> boundary;
  std::vector<EdgeId> inner;
};
PlaquetteRegionEdges plaquette_region_edges(const HoneycombLattice& lat,
                                            const std::vector<PlaquetteId>& plaquettes);

/// Open path of edges.
struct EdgePath {
  std::vector<EdgeId> edges;
  /// Visited vertices, edges.size()+1 of them.
  std::vector<VertexId> vertices;

  [[nodiscard]] VertexId start() const { return vertices.front(); }
  [[nodiscard]] VertexId end() const { return vertices.back(); }
  [[nodiscard]] bool empty() const noexcept { return edges.empty(); }
};

class InvalidPath : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Walks from a B vertex along the given bond directions. Reversing along the
/// edge just taken is an invalid step; revisiting a vertex is rejected when
/// `simple` is set.
EdgePath path_from(const HoneycombLattice& lat, VertexId v0, const std::vector<Bond>& steps,
                   bool simple = true);

/// |edges(path) intersect edges|
std::size_t crossing_edges(const EdgePath& path, const std::vector<EdgeId>& edges);

/// Edges shared by consecutive plaquettes: the edges crossed by a dual
/// path hopping between the listed plaquettes.
std::vector<EdgeId> dual_path_edges(const HoneycombLattice& lat, const std::vector<PlaquetteId>& plaquettes);

} // namespace setlab
