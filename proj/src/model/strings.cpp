#include "setlab/model/strings.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace setlab {

DressedString dressed_x_string(const HoneycombLattice& lat, const EdgePath& path) {
  DressedString s{path, XdOperator::identity()};
  for (EdgeId e : path.edges) {
    const Edge& ed = lat.edge(e);
    s.op *= XdOperator::pauli_x(lat.edge_site(e)) *
            XdOperator::cz(lat.vertex_site(ed.a), lat.vertex_site(ed.b));
  }
  return s;
}

XdOperator bare_x_string(const HoneycombLattice& lat, const EdgePath& path) {
  std::vector<SiteId> sites;
  for (EdgeId e : path.edges) sites.push_back(lat.edge_site(e));
  return XdOperator::x_product(sites);
}

XdOperator z_string(const HoneycombLattice& lat, const std::vector<EdgeId>& edges) {
  std::vector<SiteId> sites;
  for (EdgeId e : edges) sites.push_back(lat.edge_site(e));
  return XdOperator::z_product(sites);
}

namespace {

std::vector<int> vertex_distances(const HoneycombLattice& lat, VertexId from) {
  std::vector<int> dist(lat.num_vertices(), std::numeric_limits<int>::max());
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : lat.star(v)) {
      const VertexId u = lat.other_endpoint(e, v);
      if (dist[u] == std::numeric_limits<int>::max()) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int site_distance(const HoneycombLattice& lat, const std::vector<int>& dist, SiteId s) {
  if (lat.is_vertex_site(s)) return dist[lat.site_vertex(s)];
  const Edge& e = lat.edge(s);
  return std::min(dist[e.a], dist[e.b]);
}

} // namespace

std::vector<EndpointFactor> symmetry_endpoint_action(const HoneycombLattice& lat, GroupElement g,
                                                     const XdOperator& s, const std::vector<VertexId>& endpoints) {
  const XdOperator d = beta(lat, g, s) * s.inverse();
  if (!d.is_diagonal()) throw NonLocalDefect("defect operator is not diagonal", d);

  std::vector<std::vector<SiteId>> hoods;
  std::vector<std::vector<int>> dists;
  for (VertexId v : endpoints) {
    hoods.push_back(thickened_sites(lat, {v}, 1));
    dists.push_back(vertex_distances(lat, v));
  }
  std::vector<std::vector<Monomial>> parts(endpoints.size());
  std::vector<Monomial> stray;
  for (const Monomial& m : d.poly().monomials()) {
    if (m.is_constant() && !endpoints.empty()) {
      parts[0].push_back(m);
      continue;
    }
    std::size_t best = endpoints.size();
    int best_d = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
      const auto& hood = hoods[i];
      const bool inside = std::all_of(m.vars().begin(), m.vars().end(), [&](SiteId x) {
        return std::binary_search(hood.begin(), hood.end(), x);
      });
      if (!inside) continue;
      int total = 0;
      for (SiteId x : m.vars()) total += site_distance(lat, dists[i], x);
      if (total < best_d) {
        best = i;
        best_d = total;
      }
    }
    if (best == endpoints.size()) {
      stray.push_back(m);
    } else {
      parts[best].push_back(m);
    }
  }
  if (!stray.empty()) {
    throw NonLocalDefect("defect operator has support away from the string endpoints",
                         XdOperator::diagonal(PhasePoly(std::move(stray))));
  }
  std::vector<EndpointFactor> out;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    out.push_back({endpoints[i], XdOperator::diagonal(PhasePoly(std::move(parts[i])))});
  }
  return out;
}

AnyonRepresentatives make_representatives(const HoneycombLattice& lat, const EdgePath& x_path,
                                          std::vector<EdgeId> z_edges) {
  if (x_path.empty()) throw InvalidPath("anyon representatives need a nonempty X path");
  AnyonRepresentatives r;
  r.x_path = x_path;
  r.z_edges = std::move(z_edges);
  const VertexId v0 = x_path.start();
  const XdOperator sx = dressed_x_string(lat, x_path).op;
  const XdOperator sz = z_string(lat, r.z_edges);
  r.strings[0] = {Anyon::One, XdOperator::identity(), {v0}};
  r.strings[1] = {Anyon::EX, sx, {v0, x_path.end()}};
  r.strings[2] = {Anyon::EZ, sz, {v0}};
  r.strings[3] = {Anyon::F, sx * sz, {v0, x_path.end()}};
  return r;
}

AnyonRepresentatives default_representatives(const HoneycombLattice& lat) {
  std::vector<VertexId> starts;
  if (lat.kind() == LatticeKind::Torus) {
    starts.push_back(*lat.vertex_at({0, 0}, Sublattice::B));
  } else {
    for (VertexId v : lat.vertices_of(Sublattice::B)) {
      if (lat.star(v).size() == 3) starts.push_back(v);
    }
    for (VertexId v : lat.vertices_of(Sublattice::B)) {
      if (lat.star(v).size() < 3) starts.push_back(v);
    }
  }
  for (const auto& steps : {std::vector<Bond>{Bond::Z, Bond::X, Bond::Z}, std::vector<Bond>{Bond::Z}}) {
    for (VertexId v0 : starts) {
      try {
        EdgePath path = path_from(lat, v0, steps, true);
        std::vector<EdgeId> z{path.edges.front()};
        return make_representatives(lat, path, std::move(z));
      } catch (const InvalidPath&) {
      }
    }
  }
  throw InvalidPath("no default anyon path on " + lat.describe());
}

std::pair<Anyon, XdOperator> fuse_strings(const AnyonRepresentatives& reps, Anyon a, Anyon b) {
  return {fuse(a, b), reps[a].op * reps[b].op};
}

} // namespace setlab
