#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cdp/polytope.hpp"

namespace cdp {

// One region of linearity together with the affine function realized there.
// graph_normal/graph_offset describe the supporting hyperplane of the graph
// facet, primitive with positive last coordinate.
struct AffinePiece {
  LatticePolytope region;
  RatVec gradient;
  Rat constant;
  Vec graph_normal;
  Int graph_offset;

  Rat value(const RatVec& u) const { return dot(u, gradient_num_) / Rat(gradient_den_) + constant; }

  // cached integer form of the gradient: gradient = gradient_num_ / gradient_den_
  Vec gradient_num_;
  Int gradient_den_ = 1;
};

// Concave piecewise-affine function with integral graph vertices, stored as
// the support points in M x Z whose upper hull is the graph. Redundant
// support points are kept but carry no meaning.
class PLFunction {
 public:
  PLFunction(std::shared_ptr<const LatticePolytope> base, std::vector<Vec> support_points);

  const LatticePolytope& base() const { return *base_; }
  std::shared_ptr<const LatticePolytope> base_ptr() const { return base_; }
  const std::vector<Vec>& support_points() const { return support_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  Rat evaluate(const RatVec& u) const;
  Rat evaluate_at_origin() const;
  std::vector<LatticePolytope> regions_of_linearity() const;

  // vertices of the graph (upper-hull vertices), lex-sorted, redundant
  // support points stripped
  std::vector<Vec> graph_vertices() const;
  PLFunction stripped() const;
  PLFunction shifted(const Int& c) const;

  bool is_linear() const { return pieces_.size() == 1; }
  bool has_integral_slope() const;
  bool is_zero_function() const;

  // semantic equality: same base, same graph
  bool same_function(const PLFunction& o) const;

 private:
  std::shared_ptr<const LatticePolytope> base_;
  std::vector<Vec> support_;
  std::vector<AffinePiece> pieces_;
};

struct FanoCertificate {
  Vec origin;
  std::vector<Int> a;
  bool operator==(const FanoCertificate& o) const = default;
};

// Base polytope plus an ordered tuple of functions over it (Def of a CDP).
// Positivity of the sum is a property decided by check_positivity, not a
// construction invariant, so invalid candidates can be represented and tested.
class CDP {
 public:
  CDP(std::shared_ptr<const LatticePolytope> base, std::vector<PLFunction> functions);

  const LatticePolytope& base() const { return *base_; }
  std::shared_ptr<const LatticePolytope> base_ptr() const { return base_; }
  const std::vector<PLFunction>& functions() const { return functions_; }
  size_t n() const { return functions_.size(); }
  int dim() const { return base_->dim() + 1; }

  std::optional<FanoCertificate> certificate;

 private:
  std::shared_ptr<const LatticePolytope> base_;
  std::vector<PLFunction> functions_;
};

// sum >= 0 at every base vertex and > 0 at the barycenter. A concave function
// attains its minimum over a polytope at a vertex, and a nonnegative concave
// function vanishing at an interior point vanishes identically, so this
// decides strict positivity on the interior exactly.
bool check_positivity(const CDP& c);

// Def-1.1 validity: structural invariants hold and the sum is positive on the
// interior.
bool validate_cdp(const CDP& c);

Rat sum_at(const CDP& c, const RatVec& u);

// Decides integrality of f via the value at the origin of f + shift, which
// must be at height one (precondition, checked).
bool is_integral(const PLFunction& f, const Int& certificate_shift);

// True iff a single affine piece agrees with f on the full segment cut out
// of base by the line spanned by v.
bool is_linear_along(const PLFunction& f, const Vec& v);

}  // namespace cdp
