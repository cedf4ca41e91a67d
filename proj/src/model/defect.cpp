#include "setlab/model/defect.hpp"

#include <algorithm>

namespace setlab {

XdOperator DefectSector::apply(const XdOperator& x) const {
  const XdOperator v = boundary_unitary.inverse() * u;
  return v * x * v.inverse();
}

XdOperator DefectSector::apply_inverse(const XdOperator& x) const {
  const XdOperator v = u.inverse() * boundary_unitary;
  return v * x * v.inverse();
}

DefectSector defect_sector(const HoneycombLattice& lat, const RegionPartition& part, GroupElement g) {
  DefectSector s{g, part, restricted_action(lat, part, g).op, XdOperator::identity()};
  if (g == kA) {
    s.boundary_unitary = boundary_w(lat, part, Sublattice::A).w2;
  } else if (g == kB) {
    s.boundary_unitary = boundary_w(lat, part, Sublattice::B).w2;
  } else if (g == kAB) {
    const XdOperator ua = ua_restriction(lat, part).op;
    const XdOperator w2b = boundary_w(lat, part, Sublattice::B).w2;
    s.boundary_unitary = ua * w2b * ua.inverse() * boundary_w(lat, part, Sublattice::A).w2;
  }
  const auto allowed = thickened_sites(lat, part.vertices(Zone::Boundary), 1);
  auto bad = support_outside(s.boundary_unitary, allowed);
  if (!bad.empty()) {
    throw NonLocalBoundary("boundary unitary of " + element_name(g) + " reaches beyond the loop thickening",
                           std::move(bad));
  }
  return s;
}

namespace {

bool site_in_closure(const HoneycombLattice& lat, const RegionPartition& part, SiteId s) {
  return lat.is_vertex_site(s) ? part.vertex_in_closure(lat.site_vertex(s)) : part.edge_in_closure(s);
}

RegionPartition region_of(const HoneycombLattice& lat, const std::vector<PlaquetteId>& plaquettes) {
  return loop_partition(lat, Loop::around_plaquettes(lat, plaquettes));
}

std::vector<PlaquetteId> sorted(std::vector<PlaquetteId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<PlaquetteId> intersect(const std::vector<PlaquetteId>& a, const std::vector<PlaquetteId>& b) {
  std::vector<PlaquetteId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<SiteId> merge(std::vector<SiteId> a, const std::vector<SiteId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::string sites_text(const std::vector<SiteId>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return "{" + out + "}";
}

} // namespace

SectorCheck check_defect_sector(const HoneycombLattice& lat, const DefectSector& s) {
  SectorCheck c;
  const auto near = thickened_sites(lat, s.part.vertices(Zone::Boundary), 1);
  for (SiteId site = 0; site < lat.num_sites(); ++site) {
    for (const XdOperator& x : {XdOperator::pauli_x(site), XdOperator::pauli_z(site)}) {
      ++c.generators;
      const XdOperator y = s.apply(x);
      bool ok = s.apply_inverse(y) == x && s.apply(s.apply_inverse(x)) == x;
      c.composition = c.composition && ok;
      if (!std::binary_search(near.begin(), near.end(), site)) {
        if (site_in_closure(lat, s.part, site)) {
          const bool m = y == beta(lat, s.g, x);
          c.matches_inside = c.matches_inside && m;
          ok = ok && m;
        } else {
          const bool t = y == x;
          c.trivial_outside = c.trivial_outside && t;
          ok = ok && t;
        }
      }
      if (!ok && (c.offending.empty() || c.offending.back() != site)) c.offending.push_back(site);
    }
  }
  return c;
}

bool BoundaryUnitaryReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const BoundaryUnitaryItem& i) { return i.pass || i.deferred; });
}

BoundaryUnitaryReport boundary_unitary_check(const HoneycombLattice& lat, GroupElement g, const std::vector<PlaquetteId>& lambda_in,
                             const std::vector<PlaquetteId>& lambda_prime_in,
                             const std::vector<std::vector<PlaquetteId>>& frames_in) {
  const auto lambda = sorted(lambda_in);
  const auto lambda_prime = sorted(lambda_prime_in);
  if (!std::includes(lambda_prime.begin(), lambda_prime.end(), lambda.begin(), lambda.end())) {
    throw std::invalid_argument("boundary unitary check: inner region is not contained in the outer region");
  }
  BoundaryUnitaryReport rep;
  rep.items.push_back({1, false, true, "vacuum identity u Omega = W Omega is checked by the state-vector oracle", {}});

  const RegionPartition inner = region_of(lat, lambda);
  const RegionPartition outer = region_of(lat, lambda_prime);
  const DefectSector s_in = defect_sector(lat, inner, g);
  const DefectSector s_out = defect_sector(lat, outer, g);
  {
    const XdOperator diff = s_in.boundary_unitary.inverse() * s_out.boundary_unitary;
    std::vector<VertexId> region;
    for (VertexId v : outer.closed_vertices()) {
      if (inner.vertex_zone[v] != Zone::Interior) region.push_back(v);
    }
    const auto allowed = thickened_sites(lat, region, 1);
    BoundaryUnitaryItem it{2, false, false, "", support_outside(diff, allowed)};
    it.pass = it.offending.empty();
    it.detail = "support of W^* W' = " + sites_text(diff.support()) +
                (it.pass ? " inside the thickened difference region" : ", outside: " + sites_text(it.offending));
    rep.items.push_back(std::move(it));
  }

  std::vector<std::vector<PlaquetteId>> frames;
  for (const auto& f : frames_in) frames.push_back(sorted(f));
  for (std::size_t n = 1; n < frames.size(); ++n) {
    if (!std::includes(frames[n].begin(), frames[n].end(), frames[n - 1].begin(), frames[n - 1].end())) {
      throw std::invalid_argument("boundary unitary check: frames are not nested");
    }
  }
  std::vector<XdOperator> truncated;
  std::vector<RegionPartition> frame_parts;
  for (const auto& f : frames) {
    frame_parts.push_back(region_of(lat, f));
    const auto cut = intersect(lambda, f);
    truncated.push_back(cut.empty() ? XdOperator::identity()
                                    : defect_sector(lat, region_of(lat, cut), g).boundary_unitary);
  }

  {
    BoundaryUnitaryItem it{3, false, false, "", {}};
    if (frames.size() < 2) {
      it.detail = "need at least two nested frames";
    } else {
      std::vector<VertexId> seeds;
      for (VertexId v : inner.vertices(Zone::Boundary)) {
        if (frame_parts.front().vertex_zone[v] == Zone::Interior) seeds.push_back(v);
      }
      const auto probes = thickened_sites(lat, seeds, 1);
      std::size_t stable = frames.size() - 1;
      for (std::size_t n = frames.size() - 1; n-- > 0;) {
        bool same = true;
        for (SiteId p : probes) {
          for (const XdOperator& x : {XdOperator::pauli_x(p), XdOperator::pauli_z(p)}) {
            const XdOperator a = truncated[n] * x * truncated[n].inverse();
            const XdOperator b = truncated[n + 1] * x * truncated[n + 1].inverse();
            if (a != b) same = false;
          }
        }
        if (!same) break;
        stable = n;
      }
      it.pass = !probes.empty() && stable < frames.size() - 1;
      if (it.pass) rep.stable_from = stable;
      it.detail = std::to_string(probes.size()) + " probe sites; conjugation " +
                  (it.pass ? "stable from frame " + std::to_string(stable) : std::string("did not stabilize"));
    }
    rep.items.push_back(std::move(it));
  }

  {
    BoundaryUnitaryItem it{4, true, false, "", {}};
    const XdOperator u = s_in.boundary_unitary;
    const auto near_lambda = thickened_sites(lat, inner.vertices(Zone::Boundary), 1);
    for (std::size_t n = 0; n < frames.size(); ++n) {
      const auto allowed = merge(near_lambda, thickened_sites(lat, frame_parts[n].vertices(Zone::Boundary), 1));
      const auto bad = support_outside(u.inverse() * truncated[n], allowed);
      if (!bad.empty()) {
        it.pass = false;
        it.offending = merge(it.offending, bad);
      }
    }
    it.detail = it.pass ? "u^* W_N supported near the boundary of lambda or of the frame for all " +
                              std::to_string(frames.size()) + " frames"
                        : "remainder outside the boundary thickenings: " + sites_text(it.offending);
    rep.items.push_back(std::move(it));
  }
  return rep;
}

} // namespace setlab
