#include "cdp/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cdp {

namespace {

std::vector<Vec> dedup_sorted(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// rank of a rational matrix by Gaussian elimination
int rank_of(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    for (size_t i = row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[row][col];
      for (size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<RatVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(to_rat(sub(pts[i], pts[0])));
  return rank_of(std::move(diffs));
}

// Integer normal of the hyperplane through d points in R^d (generalized cross
// product via cofactors of the (d-1) x d difference matrix); zero if the
// points are affinely dependent.
Vec hyperplane_normal(const std::vector<const Vec*>& pts) {
  size_t d = pts[0]->size();
  std::vector<Vec> diff;
  for (size_t i = 1; i < d; ++i) diff.push_back(sub(*pts[i], *pts[0]));
  Vec n(d);
  for (size_t k = 0; k < d; ++k) {
    std::vector<Vec> minor(d - 1, Vec(d - 1));
    for (size_t r = 0; r + 1 < d; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < d; ++c) {
        if (c == k) continue;
        minor[r][cc++] = diff[r][c];
      }
    }
    Int m = determinant(minor);
    n[k] = (k % 2 == 0) ? m : -m;
  }
  return n;
}

// All facets of the full-dimensional hull of pts (deduped points, dim >= 2).
std::vector<Facet> brute_facets(const std::vector<Vec>& pts, size_t d) {
  std::set<std::pair<Vec, Int>> seen;
  std::vector<Facet> facets;
  size_t n = pts.size();
  std::vector<size_t> idx(d);
  // iterate over all d-subsets
  std::vector<size_t> c(d);
  for (size_t i = 0; i < d; ++i) c[i] = i;
  while (true) {
    std::vector<const Vec*> sel(d);
    for (size_t i = 0; i < d; ++i) sel[i] = &pts[c[i]];
    Vec normal = hyperplane_normal(sel);
    if (!is_zero(normal)) {
      normal = primitive(normal);
      Int offset = dot(*sel[0], normal);
      bool above = false, below = false;
      for (const Vec& p : pts) {
        Int v = dot(p, normal);
        if (v > offset) above = true;
        if (v < offset) below = true;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (above) {
          normal = negate(normal);
          offset = -offset;
        }
        if (seen.emplace(normal, offset).second) facets.push_back({normal, offset});
      }
    }
    // next combination
    size_t i = d;
    while (i > 0) {
      --i;
      if (c[i] != i + n - d) {
        ++c[i];
        for (size_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return facets;
    }
  }
}

}  // namespace

LatticePolytope LatticePolytope::from_points(std::vector<Vec> points) {
  if (points.empty()) throw std::invalid_argument("polytope: no points");
  size_t d = points[0].size();
  for (const Vec& p : points)
    if (p.size() != d) throw std::invalid_argument("polytope: mixed dimensions");
  if (d == 0) throw std::invalid_argument("polytope: zero-dimensional ambient space");
  std::vector<Vec> pts = dedup_sorted(std::move(points));
  if (affine_rank(pts) != static_cast<int>(d))
    throw std::invalid_argument("polytope: points are not full-dimensional");

  LatticePolytope p;
  p.dim_ = static_cast<int>(d);

  if (d == 1) {
    Int lo = pts.front()[0], hi = pts.back()[0];
    p.vertices_ = {{lo}, {hi}};
    p.facets_ = {{{Int(-1)}, -lo}, {{Int(1)}, hi}};
    return p;
  }

  p.facets_ = brute_facets(pts, d);
  // vertices: points whose active facet normals span R^d
  for (const Vec& q : pts) {
    std::vector<RatVec> active;
    for (const Facet& f : p.facets_)
      if (dot(q, f.normal) == f.offset) active.push_back(to_rat(f.normal));
    if (active.size() >= d && rank_of(active) == static_cast<int>(d))
      p.vertices_.push_back(q);
  }
  std::sort(p.facets_.begin(), p.facets_.end(), [](const Facet& a, const Facet& b) {
    return a.normal != b.normal ? lex_less(a.normal, b.normal) : a.offset < b.offset;
  });
  return p;
}

bool LatticePolytope::contains(const RatVec& x) const {
  for (const Facet& f : facets_)
    if (dot(x, f.normal) > Rat(f.offset)) return false;
  return true;
}

bool LatticePolytope::strictly_contains(const RatVec& x) const {
  for (const Facet& f : facets_)
    if (dot(x, f.normal) >= Rat(f.offset)) return false;
  return true;
}

std::vector<Vec> LatticePolytope::lattice_points() const {
  Vec lo = vertices_[0], hi = vertices_[0];
  for (const Vec& v : vertices_) {
    for (int i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<Vec> out;
  Vec cur = lo;
  while (true) {
    if (contains(cur)) out.push_back(cur);
    int i = 0;
    while (i < dim_) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      ++i;
    }
    if (i == dim_) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Vec> LatticePolytope::interior_lattice_points() const {
  std::vector<Vec> out;
  for (Vec& p : lattice_points())
    if (strictly_contains(p)) out.push_back(std::move(p));
  return out;
}

RatVec LatticePolytope::barycenter() const {
  RatVec b(dim_, Rat(0));
  for (const Vec& v : vertices_)
    for (int i = 0; i < dim_; ++i) b[i] += Rat(v[i]);
  for (int i = 0; i < dim_; ++i) b[i] /= Rat(Int(vertices_.size()));
  return b;
}

std::vector<Vec> LatticePolytope::facet_vertices(const Facet& f) const {
  std::vector<Vec> out;
  for (const Vec& v : vertices_)
    if (dot(v, f.normal) == f.offset) out.push_back(v);
  return out;
}

Rat alpha_v(const LatticePolytope& box, const Vec& v) {
  if (is_zero(v) || primitive(v) != v) throw std::invalid_argument("alpha_v: v must be primitive");
  if (!box.strictly_contains(Vec(v.size(), 0)))
    throw std::invalid_argument("alpha_v: origin not in the interior of the box");
  auto [fwd, bwd] = boundary_hits(box, v);
  Rat a = std::min(fwd, bwd);
  return std::min(a, Rat(1));
}

std::pair<Rat, Rat> boundary_hits(const LatticePolytope& box, const Vec& v) {
  // origin interior => every facet offset > 0 and some facet has <v,n> != 0
  Rat fwd(-1), bwd(-1);
  for (const Facet& f : box.facets()) {
    Int den = dot(v, f.normal);
    if (den > 0) {
      Rat t(f.offset, den);
      if (fwd < 0 || t < fwd) fwd = t;
    } else if (den < 0) {
      Rat t(f.offset, -den);
      if (bwd < 0 || t < bwd) bwd = t;
    }
  }
  if (fwd < 0 || bwd < 0) throw std::invalid_argument("boundary_hits: ray does not leave the box");
  return {fwd, bwd};
}

std::vector<UpperFacet> upper_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("upper_hull: no points");
  size_t k = points[0].size();
  if (k < 2) throw std::invalid_argument("upper_hull: ambient dimension must be >= 2");
  std::vector<Vec> pts = dedup_sorted(points);

  std::vector<Vec> proj;
  proj.reserve(pts.size());
  for (const Vec& p : pts) proj.emplace_back(p.begin(), p.end() - 1);
  if (affine_rank(proj) != static_cast<int>(k - 1))
    throw std::invalid_argument("upper_hull: projection is not full-dimensional");

  int rank = affine_rank(pts);
  if (rank == static_cast<int>(k - 1)) {
    // all points lie in one hyperplane; its normal cannot be vertical because
    // the projection is full-dimensional, so the flat is the single upper facet
    std::vector<const Vec*> base{&pts[0]};
    std::vector<RatVec> rows;
    size_t i = 1;
    std::vector<const Vec*> sel{&pts[0]};
    for (; i < pts.size() && sel.size() < k; ++i) {
      sel.push_back(&pts[i]);
      std::vector<RatVec> diffs;
      for (size_t j = 1; j < sel.size(); ++j) diffs.push_back(to_rat(sub(*sel[j], *sel[0])));
      if (rank_of(diffs) != static_cast<int>(sel.size() - 1)) sel.pop_back();
    }
    Vec n = hyperplane_normal(sel);
    n = primitive(n);
    if (n.back() < 0) n = negate(n);
    if (n.back() == 0) throw std::invalid_argument("upper_hull: degenerate vertical flat");
    return {{pts, n, dot(pts[0], n)}};
  }

  std::vector<Facet> facets;
  if (k == 1) throw std::invalid_argument("upper_hull: ambient dimension must be >= 2");
  facets = brute_facets(pts, k);
  std::vector<UpperFacet> out;
  for (const Facet& f : facets) {
    if (f.normal.back() <= 0) continue;
    UpperFacet uf{{}, f.normal, f.offset};
    for (const Vec& p : pts)
      if (dot(p, f.normal) == f.offset) uf.points.push_back(p);
    out.push_back(std::move(uf));
  }
  return out;
}

namespace {

Int cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// angular half-plane index: 0 for angle in [0, pi), 1 for [pi, 2pi)
int half_of(const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

bool angle_less(const Vec& a, const Vec& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

bool in_cone_closed(const Vec& a, const Vec& b, const Vec& x) {
  return cross2(a, x) >= 0 && cross2(x, b) >= 0;
}
bool in_cone_open(const Vec& a, const Vec& b, const Vec& x) {
  return cross2(a, x) > 0 && cross2(x, b) > 0;
}

}  // namespace

OrthBasisResult find_orth_basis(const LatticePolytope& box) {
  if (box.dim() != 2) throw std::invalid_argument("find_orth_basis: box must be 2-dimensional");
  Vec origin(2, 0);
  if (!box.strictly_contains(origin))
    throw std::invalid_argument("find_orth_basis: origin not interior");

  // rays through all nonzero lattice points, ordered by angle; consecutive
  // generators form a lattice basis
  std::vector<Vec> rays;
  for (const Vec& p : box.lattice_points()) {
    if (is_zero(p)) continue;
    Vec r = primitive(p);
    rays.push_back(std::move(r));
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  size_t m = rays.size();

  auto cone_of = [&](const Vec& x) -> size_t {
    for (size_t i = 0; i < m; ++i) {
      if (in_cone_closed(rays[i], rays[(i + 1) % m], x)) return i;
    }
    throw std::logic_error("find_orth_basis: ray sweep failed to locate cone");
  };

  const Vec& v1 = rays[0];
  Vec neg1 = negate(v1);
  size_t i = cone_of(neg1);
  const Vec& vi = rays[i];
  const Vec& vi1 = rays[(i + 1) % m];

  if (in_cone_open(vi, vi1, neg1)) {
    return OrthogonalBasis{negate(vi), negate(vi1), v1};
  }

  // -v1 lies on a ray; identify it as rays[i] (normalize so -v1 == vi)
  size_t ineg = (neg1 == vi) ? i : (i + 1) % m;
  const Vec& wi = rays[ineg];
  const Vec& wi1 = rays[(ineg + 1) % m];
  const Vec& v2 = rays[1 % m];
  Vec neg2 = negate(v2);

  if (in_cone_open(wi, wi1, neg2)) {
    return OrthogonalBasis{negate(wi), negate(wi1), v2};
  }
  if (neg2 == wi1) {
    // box contains +-v1, +-v2 with det(v1, v2) = +-1
    std::vector<Vec> basis_cols{v1, v2};
    for (const Vec& p : box.lattice_points()) {
      if (is_zero(p) || p == v1 || p == v2 || p == neg1 || p == neg2) continue;
      // another lattice point: express in the (v1, v2) basis, flip signs to
      // put it in the nonnegative quadrant
      Int det = cross2(v1, v2);
      Int a = (p[0] * v2[1] - p[1] * v2[0]) * det;  // det = +-1
      Int b = (v1[0] * p[1] - v1[1] * p[0]) * det;
      Vec e1 = a >= 0 ? v1 : negate(v1);
      Vec e2 = b >= 0 ? v2 : negate(v2);
      return OrthogonalBasis{e1, e2, p};
    }
    // box is exactly the cross polytope on (v1, v2): invert the column matrix
    std::vector<Vec> mat{{v2[1] * cross2(v1, v2), -v2[0] * cross2(v1, v2)},
                         {-v1[1] * cross2(v1, v2), v1[0] * cross2(v1, v2)}};
    return CrossEquivalence{UnimodularAffineMap::linear(std::move(mat))};
  }
  // -v2 outside the cone at -v1: -w_{i+1} lies strictly between v1 and v2
  return OrthogonalBasis{negate(v1), negate(v2), wi1};
}

}  // namespace cdp
