#include "cdp/fano.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdp/moves.hpp"

namespace cdp {

namespace {

// Unique integer c with f + c at height one and (f + c)(origin) > 0, if any.
// Two admissible shifts would differ by a positive integer while both shifted
// origin values lie in (0, 1], which is impossible, hence uniqueness.
std::optional<Int> pin_shift(const PLFunction& f, const Vec& origin) {
  std::vector<Int> candidates;
  {
    const AffinePiece& p0 = f.pieces().front();
    Int lambda = p0.graph_normal.back();
    Int off;
    {
      Vec w(p0.graph_normal.begin(), p0.graph_normal.end() - 1);
      off = p0.graph_offset - dot(origin, w);
    }
    for (int sgn : {+1, -1}) {
      Int target = sgn;
      if ((target - off) % lambda == 0) candidates.push_back((target - off) / lambda);
    }
  }
  std::optional<Int> found;
  for (const Int& c : candidates) {
    bool ok = true;
    for (const AffinePiece& p : f.pieces()) {
      Vec w(p.graph_normal.begin(), p.graph_normal.end() - 1);
      Int off = p.graph_offset - dot(origin, w) + p.graph_normal.back() * c;
      if (off != 1 && off != -1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (f.evaluate(to_rat(origin)) + Rat(c) <= 0) continue;
    if (found && *found != c) throw std::logic_error("pin_shift: ambiguous height-one shift");
    found = c;
  }
  return found;
}

// Sum of the functions vanishes identically on the base facet F. The sum is
// concave and PL, so zero at the facet vertices forces it nonnegative on F,
// and zero at a relative-interior point then forces it to vanish on all of F.
bool sum_vanishes_on_facet(const CDP& c, const Facet& f) {
  std::vector<Vec> fv = c.base().facet_vertices(f);
  RatVec bary(c.base().dim(), Rat(0));
  for (const Vec& v : fv) {
    if (sum_at(c, to_rat(v)) != 0) return false;
    for (int i = 0; i < c.base().dim(); ++i) bary[i] += Rat(v[i]);
  }
  for (int i = 0; i < c.base().dim(); ++i) bary[i] /= Rat(Int(fv.size()));
  return sum_at(c, bary) == 0;
}

}  // namespace

bool facet_at_height_one(const Vec& normal, const Int& offset) {
  if (is_zero(normal) || primitive(normal) != normal)
    throw std::invalid_argument("facet_at_height_one: normal must be primitive");
  return offset == 1 || offset == -1;
}

std::optional<std::vector<Int>> try_shifts_at(const CDP& c, const Vec& origin) {
  if (!c.base().strictly_contains(origin)) return std::nullopt;
  std::vector<Int> shifts;
  for (const PLFunction& f : c.functions()) {
    auto s = pin_shift(f, origin);
    if (!s) return std::nullopt;
    shifts.push_back(*s);
  }
  return shifts;
}

CertificateResult find_certificate(const CDP& c) {
  std::vector<Vec> origins = c.base().interior_lattice_points();
  if (origins.empty()) return NotFano{1, "base has no interior lattice point"};

  int best_condition = 3;
  std::string best_detail = "no integral shift puts every graph facet at height one";
  const Int want = -2;

  for (const Vec& p : origins) {
    auto shifts = try_shifts_at(c, p);
    if (!shifts) continue;
    Int sum_a = 0;
    std::vector<Int> a;
    for (const Int& s : *shifts) {
      a.push_back(s - 1);
      sum_a += s - 1;
    }
    if (sum_a != want) {
      if (best_condition < 2 || best_condition == 3) {
        best_condition = 2;
        best_detail = "height-one shifts exist but the a_i sum to " + sum_a.str();
      }
      continue;
    }
    bool boundary_ok = true;
    for (const Facet& f : c.base().facets()) {
      Int off = f.offset - dot(p, f.normal);
      if (off == 1 || off == -1) continue;
      if (!sum_vanishes_on_facet(c, f)) {
        boundary_ok = false;
        break;
      }
    }
    if (!boundary_ok) {
      best_condition = 4;
      best_detail = "sum of functions does not vanish on a facet away from height one";
      continue;
    }
    return FanoCertificate{p, std::move(a)};
  }
  return NotFano{best_condition, best_detail};
}

bool check_certificate(const CDP& c, const FanoCertificate& cert) {
  if (cert.a.size() != c.n()) return false;
  if (!c.base().strictly_contains(cert.origin)) return false;
  Int sum_a = 0;
  for (const Int& x : cert.a) sum_a += x;
  if (sum_a != -2) return false;
  for (size_t i = 0; i < c.n(); ++i) {
    const PLFunction& f = c.functions()[i];
    if (f.evaluate(to_rat(cert.origin)) + Rat(cert.a[i] + 1) <= 0) return false;
    for (const AffinePiece& p : f.pieces()) {
      Vec w(p.graph_normal.begin(), p.graph_normal.end() - 1);
      Int off = p.graph_offset - dot(cert.origin, w) + p.graph_normal.back() * (cert.a[i] + 1);
      if (off != 1 && off != -1) return false;
    }
  }
  for (const Facet& f : c.base().facets()) {
    Int off = f.offset - dot(cert.origin, f.normal);
    if (off == 1 || off == -1) continue;
    if (!sum_vanishes_on_facet(c, f)) return false;
  }
  return true;
}

OriginPresentation present_at_origin(const CDP& c, const FanoCertificate& cert) {
  CDP shifted = apply_move(c, TransformBase{UnimodularAffineMap::translation_by(negate(cert.origin))});
  std::vector<PLFunction> primes;
  for (size_t i = 0; i < shifted.n(); ++i)
    primes.push_back(shifted.functions()[i].shifted(cert.a[i] + 1));
  OriginPresentation out{std::move(shifted), std::move(primes), cert.a};
  out.cdp.certificate = FanoCertificate{Vec(c.base().dim(), 0), cert.a};
  return out;
}

Rat c_of_box(const LatticePolytope& box, const std::vector<Vec>& basis) {
  if (static_cast<int>(basis.size()) != box.dim())
    throw std::invalid_argument("c_of_box: basis size must match dimension");
  Int det = determinant(basis);
  if (det != 1 && det != -1) throw std::invalid_argument("c_of_box: basis is not unimodular");
  Rat total = 0;
  for (const Vec& e : basis) total += Rat(4) / alpha_v(box, e);
  return total;
}

int directional_bound(const CDP& c, const FanoCertificate& cert, const Vec& v) {
  if (is_zero(v) || primitive(v) != v)
    throw std::invalid_argument("directional_bound: v must be primitive");
  OriginPresentation pres = present_at_origin(c, cert);
  int r = 0;
  for (const PLFunction& prime : pres.primes) {
    bool integral = prime.evaluate_at_origin() == 1;
    if (!integral || !is_linear_along(prime, v)) ++r;
  }
  Rat cap = Rat(4) / alpha_v(pres.cdp.base(), v);
  if (Rat(r) > cap)
    throw std::logic_error("directional_bound: r exceeds 4/alpha_v");
  if (pres.cdp.base().dim() == 2) {
    auto [fwd, bwd] = boundary_hits(pres.cdp.base(), v);
    bool nonlattice_hit = false;
    for (const Rat& t : {fwd, bwd}) {
      for (const Int& vi : v)
        if (!is_integer(t * Rat(vi))) nonlattice_hit = true;
    }
    if (nonlattice_hit && Rat(Int(c.n())) > cap)
      throw std::logic_error("directional_bound: n exceeds 4/alpha_v at a non-lattice boundary hit");
  }
  return r;
}

CDP polytope_to_cdp(const LatticePolytope& p) {
  if (p.dim() < 2) throw std::invalid_argument("polytope_to_cdp: need dimension >= 2");
  std::vector<Vec> proj;
  for (const Vec& v : p.vertices()) proj.emplace_back(v.begin(), v.end() - 1);
  auto base = std::make_shared<const LatticePolytope>(LatticePolytope::from_points(proj));
  std::vector<Vec> upper = p.vertices();
  std::vector<Vec> lower = p.vertices();
  for (Vec& v : lower) v.back() = -v.back();
  std::vector<PLFunction> fns;
  fns.emplace_back(base, std::move(upper));
  fns.emplace_back(base, std::move(lower));
  return CDP(base, std::move(fns));
}

LatticePolytope cdp_to_polytope(const CDP& c) {
  if (c.n() != 2) throw std::invalid_argument("cdp_to_polytope: needs exactly two functions");
  std::vector<Vec> pts = c.functions()[0].graph_vertices();
  for (Vec v : c.functions()[1].graph_vertices()) {
    v.back() = -v.back();
    pts.push_back(std::move(v));
  }
  return LatticePolytope::from_points(std::move(pts));
}

bool is_reflexive(const LatticePolytope& p) {
  for (const Vec& q : p.interior_lattice_points()) {
    bool ok = true;
    for (const Facet& f : p.facets()) {
      if (f.offset - dot(q, f.normal) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::pair<CDP, FanoCertificate> cross_example(int d) {
  if (d < 1) throw std::invalid_argument("cross_example: d must be >= 1");
  std::vector<Vec> verts;
  for (int j = 0; j < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    verts.push_back(e);
    e[j] = -1;
    verts.push_back(e);
  }
  auto base = std::make_shared<const LatticePolytope>(LatticePolytope::from_points(verts));

  // min{1, x_j + 1} recorded by its values at the vertices plus the origin,
  // which carries the break ridge when d = 1
  auto min_one = [&](int j) {
    std::vector<Vec> pts;
    for (const Vec& v : base->vertices()) {
      Vec p = v;
      p.push_back(v[j] < 0 ? Int(v[j] + 1) : Int(1));
      pts.push_back(std::move(p));
    }
    Vec origin(d, 0);
    origin.push_back(1);
    pts.push_back(std::move(origin));
    return pts;
  };

  const int n = 4 * d;
  std::vector<std::vector<Vec>> prime_supports;
  for (int j = 0; j + 1 < d; ++j)
    for (int copy = 0; copy < 4; ++copy) prime_supports.push_back(min_one(j));
  for (int copy = 0; copy < 3; ++copy) prime_supports.push_back(min_one(d - 1));
  {
    std::vector<Vec> pts = min_one(d - 1);
    for (Vec& p : pts) {
      Int s = 0;
      for (int k = 0; k < d; ++k) s += p[k];
      p.back() -= 2 * s;
    }
    prime_supports.push_back(std::move(pts));
  }

  // canonical split: a_i = -1 except a_n = n - 3
  std::vector<Int> a(n, -1);
  a.back() = n - 3;
  std::vector<PLFunction> fns;
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> pts = std::move(prime_supports[i]);
    for (Vec& p : pts) p.back() -= a[i] + 1;
    fns.emplace_back(base, std::move(pts));
  }
  CDP c(base, std::move(fns));
  FanoCertificate cert{Vec(d, 0), a};
  c.certificate = cert;
  return {std::move(c), std::move(cert)};
}

}  // namespace cdp
