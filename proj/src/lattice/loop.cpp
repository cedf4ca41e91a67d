#include "setlab/lattice/loop.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace setlab {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <typename T>
bool contains(const std::vector<T>& sorted, T x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

} // namespace

std::vector<VertexId> RegionPartition::vertices(Zone z) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_zone.size(); ++v) {
    if (vertex_zone[v] == z) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> RegionPartition::edges(Zone z) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_zone.size(); ++e) {
    if (edge_zone[e] == z) out.push_back(e);
  }
  return out;
}

std::vector<VertexId> RegionPartition::closed_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_zone.size(); ++v) {
    if (vertex_zone[v] != Zone::Exterior) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> RegionPartition::closed_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_zone.size(); ++e) {
    if (edge_zone[e] != Zone::Exterior) out.push_back(e);
  }
  return out;
}

Loop::Loop(const HoneycombLattice& lat, std::vector<EdgeId> edges, std::vector<VertexId> interior_vertices,
           std::vector<EdgeId> interior_chords)
    : interior_vertices_(sorted_unique(std::move(interior_vertices))),
      interior_chords_(sorted_unique(std::move(interior_chords))) {
  if (edges.empty()) throw InvalidLoop("loop has no edges");
  const auto edge_set = sorted_unique(edges);
  if (edge_set.size() != edges.size()) throw InvalidLoop("loop repeats an edge");
  for (EdgeId e : edge_set) {
    if (e >= lat.num_edges()) throw InvalidLoop("loop edge out of range");
  }

  std::map<VertexId, std::vector<EdgeId>> incident;
  for (EdgeId e : edge_set) {
    incident[lat.edge(e).a].push_back(e);
    incident[lat.edge(e).b].push_back(e);
  }
  for (const auto& [v, es] : incident) {
    if (es.size() != 2) {
      throw InvalidLoop("vertex " + std::to_string(v) + " meets " + std::to_string(es.size()) +
                        " loop edges (expected 2)");
    }
  }

  // Walk each cycle in order.
  std::set<EdgeId> remaining(edge_set.begin(), edge_set.end());
  while (!remaining.empty()) {
    const EdgeId first = *remaining.begin();
    EdgeId e = first;
    VertexId v = lat.edge(first).b;
    do {
      edges_.push_back(e);
      remaining.erase(e);
      v = lat.other_endpoint(e, v);
      const auto& pair = incident[v];
      e = pair[0] == e ? pair[1] : pair[0];
    } while (e != first);
    ++cycles_;
  }

  for (VertexId v : interior_vertices_) {
    if (v >= lat.num_vertices()) throw InvalidLoop("interior vertex out of range");
    if (incident.count(v)) throw InvalidLoop("interior vertex " + std::to_string(v) + " lies on the loop");
  }
  for (EdgeId e : interior_chords_) {
    if (e >= lat.num_edges()) throw InvalidLoop("interior chord out of range");
    if (contains(edge_set, e)) throw InvalidLoop("interior chord lies on the loop");
    if (!incident.count(lat.edge(e).a) || !incident.count(lat.edge(e).b)) {
      throw InvalidLoop("interior chord " + std::to_string(e) + " does not join two loop vertices");
    }
  }
  (void)loop_partition(lat, *this);
}

RegionPartition loop_partition(const HoneycombLattice& lat, const Loop& loop) {
  RegionPartition part;
  part.vertex_zone.assign(lat.num_vertices(), Zone::Exterior);
  part.edge_zone.assign(lat.num_edges(), Zone::Exterior);
  for (EdgeId e : loop.edges()) {
    part.edge_zone[e] = Zone::Boundary;
    part.vertex_zone[lat.edge(e).a] = Zone::Boundary;
    part.vertex_zone[lat.edge(e).b] = Zone::Boundary;
  }
  for (VertexId v : loop.interior_vertices()) {
    if (part.vertex_zone.at(v) == Zone::Boundary) throw InvalidLoop("interior vertex lies on the loop");
    part.vertex_zone[v] = Zone::Interior;
  }
  for (EdgeId e : loop.interior_chords()) {
    if (part.edge_zone.at(e) == Zone::Boundary) throw InvalidLoop("interior chord lies on the loop");
    part.edge_zone[e] = Zone::Interior;
  }
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    if (part.edge_zone[e] == Zone::Boundary) continue;
    const Zone za = part.vertex_zone[lat.edge(e).a];
    const Zone zb = part.vertex_zone[lat.edge(e).b];
    const bool touches_int = za == Zone::Interior || zb == Zone::Interior;
    const bool touches_ext = za == Zone::Exterior || zb == Zone::Exterior;
    if (touches_int && touches_ext) {
      throw InvalidLoop("edge " + std::to_string(e) + " joins the interior to the exterior");
    }
    if (touches_int) {
      part.edge_zone[e] = Zone::Interior;
    } else if (part.edge_zone[e] == Zone::Interior && touches_ext) {
      throw InvalidLoop("interior chord " + std::to_string(e) + " touches the exterior");
    }
  }
  return part;
}

PlaquetteRegionEdges plaquette_region_edges(const HoneycombLattice& lat,
                                            const std::vector<PlaquetteId>& plaquettes) {
  std::map<EdgeId, int> count;
  for (PlaquetteId p : sorted_unique(plaquettes)) {
    for (EdgeId e : lat.plaquette_edges(p)) ++count[e];
  }
  PlaquetteRegionEdges out;
  for (const auto& [e, c] : count) (c == 1 ? out.boundary : out.inner).push_back(e);
  return out;
}

Loop Loop::around_plaquettes(const HoneycombLattice& lat, std::vector<PlaquetteId> plaquettes) {
  plaquettes = sorted_unique(std::move(plaquettes));
  if (plaquettes.empty()) throw InvalidLoop("no plaquettes given");
  std::vector<VertexId> covered;
  for (PlaquetteId p : plaquettes) {
    if (p >= lat.num_plaquettes()) throw InvalidLoop("plaquette out of range");
    if (!lat.plaquette_is_simple(p)) throw InvalidLoop("plaquette " + std::to_string(p) + " is degenerate");
    const auto vs = lat.plaquette_vertices(p);
    covered.insert(covered.end(), vs.begin(), vs.end());
  }
  covered = sorted_unique(std::move(covered));
  const auto region = plaquette_region_edges(lat, plaquettes);

  std::vector<VertexId> on_loop;
  for (EdgeId e : region.boundary) {
    on_loop.push_back(lat.edge(e).a);
    on_loop.push_back(lat.edge(e).b);
  }
  on_loop = sorted_unique(std::move(on_loop));
  std::vector<VertexId> interior;
  std::set_difference(covered.begin(), covered.end(), on_loop.begin(), on_loop.end(),
                      std::back_inserter(interior));
  std::vector<EdgeId> chords;
  for (EdgeId e : region.inner) {
    if (contains(on_loop, lat.edge(e).a) && contains(on_loop, lat.edge(e).b)) chords.push_back(e);
  }
  return Loop(lat, region.boundary, std::move(interior), std::move(chords));
}

Loop Loop::hexagon(const HoneycombLattice& lat, PlaquetteId p) { return around_plaquettes(lat, {p}); }

Loop hexagon_loop(const HoneycombLattice& lat, PlaquetteId p) { return Loop::hexagon(lat, p); }

Loop Loop::flood_filled(const HoneycombLattice& lat, std::vector<EdgeId> edges) {
  if (lat.kind() != LatticeKind::Patch) {
    throw InvalidLoop("flood fill needs a planar patch; supply the interior explicitly on a torus");
  }
  const auto on_loop = sorted_unique(edges);
  std::map<EdgeId, std::vector<PlaquetteId>> faces_of;
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    for (EdgeId e : lat.plaquette_edges(p)) faces_of[e].push_back(p);
  }
  // Faces reachable from the outer face without crossing the loop.
  std::vector<bool> outside(lat.num_plaquettes(), false);
  std::deque<PlaquetteId> queue;
  for (const auto& [e, faces] : faces_of) {
    if (faces.size() == 1 && !contains(on_loop, e) && !outside[faces[0]]) {
      outside[faces[0]] = true;
      queue.push_back(faces[0]);
    }
  }
  while (!queue.empty()) {
    const PlaquetteId p = queue.front();
    queue.pop_front();
    for (EdgeId e : lat.plaquette_edges(p)) {
      if (contains(on_loop, e)) continue;
      for (PlaquetteId q : faces_of[e]) {
        if (!outside[q]) {
          outside[q] = true;
          queue.push_back(q);
        }
      }
    }
  }
  std::vector<PlaquetteId> inside;
  for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
    if (!outside[p]) inside.push_back(p);
  }
  if (inside.empty()) throw InvalidLoop("loop encloses no plaquette");
  Loop filled = around_plaquettes(lat, inside);
  if (sorted_unique(filled.edges()) != on_loop) {
    throw InvalidLoop("edges do not bound the region they enclose");
  }
  Loop out(lat, std::move(edges), filled.interior_vertices(), filled.interior_chords());
  return out;
}

EdgePath path_from(const HoneycombLattice& lat, VertexId v0, const std::vector<Bond>& steps, bool simple) {
  if (v0 >= lat.num_vertices()) throw InvalidPath("start vertex out of range");
  if (lat.sublattice(v0) != Sublattice::B) throw InvalidPath("path must start on a B vertex");
  EdgePath path;
  path.vertices.push_back(v0);
  std::set<VertexId> seen{v0};
  VertexId v = v0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& slot = lat.vertex(v).bonds[static_cast<std::size_t>(steps[k])];
    if (!slot) throw InvalidPath("step " + std::to_string(k) + " leaves the lattice");
    const EdgeId e = *slot;
    if (!path.edges.empty() && path.edges.back() == e) {
      throw InvalidPath("step " + std::to_string(k) + " reverses the previous edge");
    }
    v = lat.other_endpoint(e, v);
    if (simple && !seen.insert(v).second) {
      throw InvalidPath("step " + std::to_string(k) + " revisits vertex " + std::to_string(v));
    }
    path.edges.push_back(e);
    path.vertices.push_back(v);
  }
  return path;
}

std::size_t crossing_edges(const EdgePath& path, const std::vector<EdgeId>& edges) {
  const auto a = sorted_unique(path.edges);
  const auto b = sorted_unique(edges);
  std::vector<EdgeId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.size();
}

std::vector<EdgeId> dual_path_edges(const HoneycombLattice& lat, const std::vector<PlaquetteId>& plaquettes) {
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k + 1 < plaquettes.size(); ++k) {
    const auto a = lat.plaquette_edges(plaquettes[k]);
    const auto b = lat.plaquette_edges(plaquettes[k + 1]);
    std::vector<EdgeId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() != 1) {
      throw InvalidPath("plaquettes " + std::to_string(plaquettes[k]) + " and " +
                        std::to_string(plaquettes[k + 1]) + " do not share exactly one edge");
    }
    out.push_back(common[0]);
  }
  return out;
}

} // namespace setlab
