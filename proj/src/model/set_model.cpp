#include "setlab/model/set_model.hpp"

#include <algorithm>
#include <map>

namespace setlab {

std::string element_name(GroupElement g) {
  return "(" + std::to_string(g & 1U) + "," + std::to_string((g >> 1U) & 1U) + ")";
}

bool flips(GroupElement g, Sublattice s) { return s == Sublattice::A ? (g & 1U) != 0 : (g & 2U) != 0; }

std::string anyon_name(Anyon a) {
  switch (a) {
    case Anyon::One: return "1";
    case Anyon::EX: return "eX";
    case Anyon::EZ: return "eZ";
    case Anyon::F: return "f";
  }
  return "?";
}

std::vector<std::string> anyon_names() {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < kNumAnyons; ++a) out.push_back(anyon_name(static_cast<Anyon>(a)));
  return out;
}

namespace {

SymmetryAction action_on(const HoneycombLattice& lat, GroupElement g, const std::vector<VertexId>& vertices) {
  SymmetryAction act;
  act.g = g;
  std::vector<SiteId> sites;
  for (VertexId v : vertices) {
    if (flips(g, lat.sublattice(v))) {
      act.support.push_back(v);
      sites.push_back(lat.vertex_site(v));
    }
  }
  act.op = XdOperator::x_product(sites);
  return act;
}

Sublattice opposite(Sublattice s) { return s == Sublattice::A ? Sublattice::B : Sublattice::A; }

VertexId endpoint_on(const Edge& e, Sublattice s) { return s == Sublattice::A ? e.a : e.b; }

} // namespace

SymmetryAction global_action(const HoneycombLattice& lat, GroupElement g) {
  std::vector<VertexId> all(lat.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  return action_on(lat, g, all);
}

SymmetryAction restricted_action(const HoneycombLattice& lat, const RegionPartition& part, GroupElement g) {
  return action_on(lat, g, part.closed_vertices());
}

SymmetryAction ua_restriction(const HoneycombLattice& lat, const RegionPartition& part) {
  return restricted_action(lat, part, kA);
}

SymmetryAction ub_restriction(const HoneycombLattice& lat, const RegionPartition& part) {
  return restricted_action(lat, part, kB);
}

XdOperator beta(const HoneycombLattice& lat, GroupElement g, const XdOperator& x) {
  std::vector<SiteId> sites;
  for (SiteId s : x.support()) {
    if (lat.is_vertex_site(s) && flips(g, lat.sublattice(lat.site_vertex(s)))) sites.push_back(s);
  }
  if (sites.empty()) return x;
  const XdOperator f = XdOperator::x_product(sites);
  return f * x * f;
}

BoundaryW boundary_w(const HoneycombLattice& lat, const RegionPartition& part, Sublattice s) {
  BoundaryW out;
  out.sublattice = s;
  const Sublattice other = opposite(s);
  std::map<VertexId, std::vector<EdgeId>> by_vertex;
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    const Edge& ed = lat.edge(e);
    if (part.vertex_in_closure(endpoint_on(ed, s))) by_vertex[endpoint_on(ed, other)].push_back(e);
  }
  PhasePoly p1, p2;
  for (const auto& [v, edges] : by_vertex) {
    const auto star = lat.star(v);
    const bool full = std::all_of(star.begin(), star.end(), [&](EdgeId e) { return part.edge_in_closure(e); });
    if (full) out.full_star_vertices.push_back(v);
    for (EdgeId e : edges) {
      const PhasePoly f = XdOperator::cz(lat.vertex_site(v), lat.edge_site(e)).poly();
      if (full) {
        p1 += f;
        out.w1_factors.emplace_back(v, e);
      } else {
        p2 += f;
        out.w2_factors.emplace_back(v, e);
      }
    }
  }
  out.w1 = XdOperator::diagonal(p1);
  out.w2 = XdOperator::diagonal(p2);
  out.w = XdOperator::diagonal(p1 + p2);
  return out;
}

XdOperator controlled_star(const HoneycombLattice& lat, VertexId v) {
  // z_v * (exponent of A_v), expanded monomial by monomial.
  std::vector<Monomial> terms;
  const SiteId sv = lat.vertex_site(v);
  const XdOperator star = vertex_op(lat, v);
  for (const Monomial& m : star.poly().monomials()) {
    std::vector<SiteId> vars = m.vars();
    if (std::find(vars.begin(), vars.end(), sv) == vars.end()) vars.push_back(sv);
    terms.emplace_back(std::move(vars));
  }
  return XdOperator::diagonal(PhasePoly(std::move(terms)));
}

RestrictionIdentityResult verify_restriction_identity(const HoneycombLattice& lat, const RegionPartition& part, const EntanglerCircuit& circ,
                         Sublattice s) {
  const SymmetryAction u = restricted_action(lat, part, s == Sublattice::A ? kA : kB);
  const BoundaryW w = boundary_w(lat, part, s);
  const XdOperator big_u = circ.product();
  const XdOperator lhs = u.op * big_u;
  const XdOperator rhs = w.w * big_u * u.op;
  RestrictionIdentityResult r;
  r.residual = lhs * rhs.inverse();
  r.pass = r.residual.is_identity();
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    const VertexId v = endpoint_on(lat.edge(e), s);
    if (std::binary_search(u.support.begin(), u.support.end(), v) && !circ.contains(e)) r.missed.push_back(e);
  }
  return r;
}

std::vector<SiteId> thickened_sites(const HoneycombLattice& lat, const std::vector<VertexId>& seeds, int r) {
  const auto ball = lat.vertex_ball(seeds, r);
  std::vector<bool> in_ball(lat.num_vertices(), false);
  std::vector<SiteId> out;
  for (VertexId v : ball) {
    in_ball[v] = true;
    out.push_back(lat.vertex_site(v));
  }
  for (EdgeId e = 0; e < lat.num_edges(); ++e) {
    if (in_ball[lat.edge(e).a] || in_ball[lat.edge(e).b]) out.push_back(lat.edge_site(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SiteId> support_outside(const XdOperator& x, const std::vector<SiteId>& allowed) {
  std::vector<SiteId> out;
  const auto sup = x.support();
  std::set_difference(sup.begin(), sup.end(), allowed.begin(), allowed.end(), std::back_inserter(out));
  return out;
}

SetModel::SetModel(HoneycombLattice lat)
    : lat_(std::move(lat)),
      module_(cohomology::GModule::trivial(cohomology::FiniteGroup::klein(), anyon_names())),
      full_(entangler_full(lat_)) {}

} // namespace setlab
