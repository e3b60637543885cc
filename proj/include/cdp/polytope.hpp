#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "cdp/lattice.hpp"

namespace cdp {

// Outward halfspace {x : <x, normal> <= offset}, normal primitive integral.
struct Facet {
  Vec normal;
  Int offset;
  bool operator==(const Facet& o) const = default;
};

// Full-dimensional polytope with integer vertices, carrying both the vertex
// set (extreme points only, lex-sorted) and the facet H-representation.
class LatticePolytope {
 public:
  static LatticePolytope from_points(std::vector<Vec> points);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RatVec& x) const;
  bool strictly_contains(const RatVec& x) const;
  bool contains(const Vec& x) const { return contains(to_rat(x)); }
  bool strictly_contains(const Vec& x) const { return strictly_contains(to_rat(x)); }

  std::vector<Vec> lattice_points() const;
  std::vector<Vec> interior_lattice_points() const;
  RatVec barycenter() const;

  // vertices of the polytope lying on the given facet
  std::vector<Vec> facet_vertices(const Facet& f) const;

  bool operator==(const LatticePolytope& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_;
  }

 private:
  LatticePolytope() = default;
  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
};

// alpha_v = min{1, max{a >= 0 : +-a v in box}} for primitive v, origin interior.
Rat alpha_v(const LatticePolytope& box, const Vec& v);

// Exact hit parameters of the rays t*v and -t*v (t > 0) against the boundary.
// Uncapped, unlike alpha_v.
std::pair<Rat, Rat> boundary_hits(const LatticePolytope& box, const Vec& v);

// One upper facet of the hull of a (d+1)-dimensional point set: the input
// points lying on it, plus the supporting hyperplane <x, normal> = offset with
// primitive normal whose last coordinate is positive.
struct UpperFacet {
  std::vector<Vec> points;
  Vec normal;
  Int offset;
};

// Upper facets of conv(points); requires the projection to the first dim-1
// coordinates to be full-dimensional. Handles the degenerate case where all
// points lie in a single non-vertical hyperplane (one facet).
std::vector<UpperFacet> upper_hull(const std::vector<Vec>& points);

// Lemma-style basis search for 2-d boxes with interior origin: either a
// unimodular map carrying the box onto conv{+-e1, +-e2}, or a lattice basis
// (e1, e2) with -e1, -e2 in the box and a witness a*e1 + b*e2 in the box,
// a, b >= 0.
struct CrossEquivalence {
  UnimodularAffineMap map;
};
struct OrthogonalBasis {
  Vec e1, e2, witness;
};
using OrthBasisResult = std::variant<CrossEquivalence, OrthogonalBasis>;

OrthBasisResult find_orth_basis(const LatticePolytope& box);

}  // namespace cdp
