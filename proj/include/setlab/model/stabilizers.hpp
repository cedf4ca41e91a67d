#pragma once

#include <vector>

#include "setlab/algebra/xd_operator.hpp"
#include "setlab/lattice/loop.hpp"

namespace setlab {

/// A_v: sigma_z on every edge of the star of v.
XdOperator vertex_op(const HoneycombLattice& lat, VertexId v);
/// B_p: sigma_x on the hexagon edges. Edges walked twice (1-wide tori) cancel.
XdOperator plaquette_op(const HoneycombLattice& lat, PlaquetteId p);

/// Product of CCZ_{v_eA, e, v_eB} over a set of edges.
struct EntanglerCircuit {
  std::vector<EdgeId> edges;
  std::vector<XdOperator> factors;

  [[nodiscard]] XdOperator product() const;
  [[nodiscard]] bool contains(EdgeId e) const;
};

XdOperator ccz_factor(const HoneycombLattice& lat, EdgeId e);
EntanglerCircuit entangler_edges(const HoneycombLattice& lat, std::vector<EdgeId> edges);
/// One factor per edge of E_int and E_bd.
EntanglerCircuit entangler_region(const HoneycombLattice& lat, const RegionPartition& part);
/// Every edge of the lattice; conjugation by it is the entangler automorphism.
EntanglerCircuit entangler_full(const HoneycombLattice& lat);

/// circ * a * circ^{-1}, conjugating only by the factors that touch the
/// flipped sites of a.
XdOperator alpha_conjugate(const EntanglerCircuit& circ, const XdOperator& a);

} // namespace setlab
