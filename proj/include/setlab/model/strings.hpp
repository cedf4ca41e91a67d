#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setlab/model/set_model.hpp"

namespace setlab {

/// prod over the path of sigma_x^(e) CZ(v_eA, v_eB).
struct DressedString {
  EdgePath path;
  XdOperator op;
};

DressedString dressed_x_string(const HoneycombLattice& lat, const EdgePath& path);
/// The bare string prod sigma_x^(e).
XdOperator bare_x_string(const HoneycombLattice& lat, const EdgePath& path);
/// prod sigma_z^(e) over the given edges (diagonal, fixed by the entangler).
XdOperator z_string(const HoneycombLattice& lat, const std::vector<EdgeId>& edges);

class NonLocalDefect : public std::runtime_error {
public:
  NonLocalDefect(const std::string& what, XdOperator residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  [[nodiscard]] const XdOperator& residual() const noexcept { return residual_; }

private:
  XdOperator residual_;
};

/// Local factor of a defect operator at one endpoint.
struct EndpointFactor {
  VertexId endpoint;
  XdOperator op;
};

/// Splits D = beta_g(s) s^{-1} over the endpoints. D is always diagonal;
/// each monomial goes to the nearest endpoint whose radius-1 neighborhood
/// contains it, and a constant sign goes to the first endpoint. Throws
/// NonLocalDefect when a monomial fits no neighborhood. The product of the
/// factors equals D.
std::vector<EndpointFactor> symmetry_endpoint_action(const HoneycombLattice& lat, GroupElement g,
                                                     const XdOperator& s, const std::vector<VertexId>& endpoints);

/// A string operator for one anyon label. endpoints[0] is the designated
/// endpoint v0 whose factors make up the W table; strings without vertex
/// endpoints (1, eZ) still carry v0 for bookkeeping.
struct AnyonString {
  Anyon label = Anyon::One;
  XdOperator op;
  std::vector<VertexId> endpoints;
};

struct AnyonRepresentatives {
  EdgePath x_path;
  std::vector<EdgeId> z_edges;
  std::array<AnyonString, kNumAnyons> strings;

  [[nodiscard]] const AnyonString& operator[](Anyon a) const { return strings[static_cast<std::size_t>(a)]; }
  [[nodiscard]] VertexId v0() const { return x_path.start(); }
};

/// eX = dressed X string on the path, eZ = z string on z_edges, f = eX eZ.
AnyonRepresentatives make_representatives(const HoneycombLattice& lat, const EdgePath& x_path,
                                          std::vector<EdgeId> z_edges);

/// Path Z, X, Z from B(0,0) when it is simple, otherwise one Z step; either
/// way it runs from a B vertex to an A vertex, which puts the sign of
/// beta_(1,1)(S) S^-1 at v0. The z string is sigma_z on the first path edge, so the two strings
/// cross once. On patches the walk prefers B vertices with a full star.
AnyonRepresentatives default_representatives(const HoneycombLattice& lat);

/// Fusion of labels with the product of the representative operators.
std::pair<Anyon, XdOperator> fuse_strings(const AnyonRepresentatives& reps, Anyon a, Anyon b);

} // namespace setlab
