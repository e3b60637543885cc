#pragma once

// Internal helpers for one-dimensional bases: a concave height-one function is
// a polyline with integer vertices, which keeps canonicalization and
// enumeration off the general hull machinery.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdp/numbers.hpp"

namespace cdp::poly1 {

using Pt = std::pair<Int, Int>;

// vertices ordered by strictly increasing x, strictly decreasing slopes
struct Poly {
  std::vector<Pt> v;

  const Int& left_x() const { return v.front().first; }
  const Int& right_x() const { return v.back().first; }
  const Int& left_y() const { return v.front().second; }
  const Int& right_y() const { return v.back().second; }
};

// p*y0 - q*x0 for the segment through (x0,y0) with primitive direction (p,q);
// constant along the segment's line, and |.| = 1 iff the facet is at height one
Int segment_level(const Pt& a, const Pt& b);

// primitive direction (p, q), p > 0
std::pair<Int, Int> segment_direction(const Pt& a, const Pt& b);

Rat value(const Poly& f, const Rat& x);

bool is_concave_polyline(const Poly& f);
bool all_height_one(const Poly& f);

// The unique integer c such that f + c is at height one with positive value at
// x = 0; requires left_x < 0 < right_x.
std::optional<Int> pin_shift(const Poly& f);

Poly shifted(const Poly& f, const Int& c);
Poly sheared(const Poly& f, const Int& beta);            // y += beta * x
Poly placed(const Poly& f, const Int& p, int sign);      // x -> sign*(x - p)
bool linear_with_integer_slope(const Poly& f);

std::string encode(const Poly& f);

}  // namespace cdp::poly1
