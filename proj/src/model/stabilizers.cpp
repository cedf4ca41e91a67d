#include "setlab/model/stabilizers.hpp"

#include <algorithm>

namespace setlab {

XdOperator vertex_op(const HoneycombLattice& lat, VertexId v) {
  std::vector<SiteId> sites;
  for (EdgeId e : lat.star(v)) sites.push_back(lat.edge_site(e));
  return XdOperator::z_product(sites);
}

XdOperator plaquette_op(const HoneycombLattice& lat, PlaquetteId p) {
  std::vector<SiteId> sites;
  for (EdgeId e : lat.plaquette(p).edges) sites.push_back(lat.edge_site(e));
  return XdOperator::x_product(sites);
}

XdOperator EntanglerCircuit::product() const {
  PhasePoly p;
  for (const auto& f : factors) p += f.poly();
  return XdOperator::diagonal(std::move(p));
}

bool EntanglerCircuit::contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

XdOperator ccz_factor(const HoneycombLattice& lat, EdgeId e) {
  const Edge& ed = lat.edge(e);
  return XdOperator::ccz(lat.vertex_site(ed.a), lat.edge_site(e), lat.vertex_site(ed.b));
}

EntanglerCircuit entangler_edges(const HoneycombLattice& lat, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EntanglerCircuit c;
  for (EdgeId e : edges) {
    if (e >= lat.num_edges()) throw std::out_of_range("entangler: edge out of range");
    c.factors.push_back(ccz_factor(lat, e));
  }
  c.edges = std::move(edges);
  return c;
}

EntanglerCircuit entangler_region(const HoneycombLattice& lat, const RegionPartition& part) {
  return entangler_edges(lat, part.closed_edges());
}

EntanglerCircuit entangler_full(const HoneycombLattice& lat) {
  std::vector<EdgeId> all(lat.num_edges());
  for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  return entangler_edges(lat, std::move(all));
}

XdOperator alpha_conjugate(const EntanglerCircuit& circ, const XdOperator& a) {
  const auto& flips = a.xsupport();
  XdOperator out = a;
  for (const auto& f : circ.factors) {
    const auto& vars = f.poly().monomials().front().vars();
    const bool touches = std::any_of(vars.begin(), vars.end(), [&](SiteId s) {
      return std::binary_search(flips.begin(), flips.end(), s);
    });
    if (touches) out = f * out * f;
  }
  return out;
}

} // namespace setlab
