#include "cdp/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "poly1.hpp"

namespace cdp {

namespace {

bool eliminable(const PLFunction& f) { return f.is_linear() && f.has_integral_slope(); }

size_t count_noneliminable(const CDP& c) {
  size_t k = 0;
  for (const PLFunction& f : c.functions())
    if (!eliminable(f)) ++k;
  return k;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// ----- d = 1: the complete code -----------------------------------------

std::vector<poly1::Poly> extract_polylines(const CDP& c) {
  std::vector<poly1::Poly> out;
  for (const PLFunction& f : c.functions()) {
    poly1::Poly p;
    for (const Vec& gv : f.graph_vertices()) p.v.push_back({gv[0], gv[1]});
    std::sort(p.v.begin(), p.v.end());
    out.push_back(std::move(p));
  }
  return out;
}

std::string code_1d(const CDP& c) {
  const Int lo = c.base().vertices().front()[0];
  const Int hi = c.base().vertices().back()[0];
  const size_t n = c.n();
  const Int n_minus_2 = Int(n) - 2;
  std::vector<poly1::Poly> polys = extract_polylines(c);

  std::optional<std::string> best;
  for (Int p = lo + 1; p < hi; ++p) {
    for (int sign : {+1, -1}) {
      Int l = sign > 0 ? p - lo : hi - p;
      Int r = sign > 0 ? hi - p : p - lo;

      std::vector<poly1::Poly> placed;
      std::vector<Int> shifts;
      bool ok = true;
      Int shift_sum = 0;
      for (const poly1::Poly& f : polys) {
        poly1::Poly g = poly1::placed(f, p, sign);
        auto cshift = poly1::pin_shift(g);
        if (!cshift) {
          ok = false;
          break;
        }
        shifts.push_back(*cshift);
        shift_sum += *cshift;
        placed.push_back(poly1::shifted(g, *cshift));
      }
      // certificate conditions at this placement: sum a_i = -2, and the sum of
      // the translated functions equals n-2 on any boundary point away from
      // height one
      if (!ok || shift_sum != n_minus_2) continue;
      if (l != 1) {
        Int s = 0;
        for (const poly1::Poly& g : placed) s += g.left_y();
        if (s != n_minus_2) continue;
      }
      if (r != 1) {
        Int s = 0;
        for (const poly1::Poly& g : placed) s += g.right_y();
        if (s != n_minus_2) continue;
      }

      std::string header = "b" + l.str() + ":" + r.str() + "#";
      for (size_t j = 0; j < n; ++j) {
        // shear the anchor value of every function but j into [0, l); j
        // compensates so the shears sum to zero
        std::vector<Int> betas(n, 0);
        Int total = 0;
        for (size_t i = 0; i < n; ++i) {
          if (i == j) continue;
          betas[i] = floor_div(placed[i].left_y(), l);
          total += betas[i];
        }
        betas[j] = -total;
        std::vector<std::string> blocks;
        for (size_t i = 0; i < n; ++i)
          blocks.push_back(poly1::encode(poly1::sheared(placed[i], betas[i])));
        std::sort(blocks.begin(), blocks.end());
        std::string cand = header;
        for (const std::string& b : blocks) {
          cand += b;
          cand += '|';
        }
        if (!best || cand < *best) best = std::move(cand);
      }
    }
  }
  if (!best) throw std::logic_error("canonical_code: no certifying placement found");
  return *best;
}

// ----- d >= 2: best-effort code ------------------------------------------

int rat_rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size(), row = 0;
  int rank = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
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

// linear lattice automorphisms of the translated base fixing the origin
std::vector<UnimodularAffineMap> base_automorphisms(const LatticePolytope& box) {
  const int d = box.dim();
  const std::vector<Vec>& verts = box.vertices();
  // reference: first linearly independent d-subset of the vertices
  std::vector<Vec> ref;
  std::vector<RatVec> acc;
  for (const Vec& v : verts) {
    acc.push_back(to_rat(v));
    if (rat_rank(acc) == static_cast<int>(acc.size())) {
      ref.push_back(v);
    } else {
      acc.pop_back();
    }
    if (static_cast<int>(ref.size()) == d) break;
  }

  std::vector<UnimodularAffineMap> autos;
  std::vector<size_t> pick(d, 0);
  std::vector<Vec> sorted_verts = verts;
  while (true) {
    // solve U * ref_k = verts[pick_k] exactly over the rationals
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(2 * d));
    for (int row = 0; row < d; ++row)
      for (int k = 0; k < d; ++k) {
        aug[row][k] = Rat(ref[k][row]);
        aug[row][d + k] = Rat(verts[pick[k]][row]);
      }
    bool singular = false;
    for (int col = 0; col < d && !singular; ++col) {
      int piv = col;
      while (piv < d && aug[piv][col] == 0) ++piv;
      if (piv == d) {
        singular = true;
        break;
      }
      std::swap(aug[col], aug[piv]);
      for (int i = 0; i < d; ++i) {
        if (i == col || aug[i][col] == 0) continue;
        Rat f = aug[i][col] / aug[col][col];
        for (int jj = col; jj < 2 * d; ++jj) aug[i][jj] -= f * aug[col][jj];
      }
    }
    if (!singular) {
      bool integral = true;
      std::vector<Vec> mat(d, Vec(d));
      for (int i = 0; i < d && integral; ++i)
        for (int k = 0; k < d && integral; ++k) {
          Rat u = aug[i][d + k] / aug[i][i];
          if (!is_integer(u)) integral = false;
          else mat[i][k] = numerator(u);
        }
      if (integral) {
        Int det = determinant(mat);
        if (det == 1 || det == -1) {
          UnimodularAffineMap U = UnimodularAffineMap::linear(mat);
          std::vector<Vec> image;
          for (const Vec& v : verts) image.push_back(U.apply(v));
          std::sort(image.begin(), image.end(), lex_less);
          if (image == sorted_verts) autos.push_back(std::move(U));
        }
      }
    }
    int i = d - 1;
    while (i >= 0 && ++pick[i] == verts.size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return autos;
}

// dual vector with <anchor, w> = gcd(anchor), via iterated extended gcd
Vec dual_for(const Vec& anchor) {
  Vec w(anchor.size(), 0);
  Int g = 0;
  for (size_t i = 0; i < anchor.size(); ++i) {
    if (anchor[i] == 0) continue;
    if (g == 0) {
      g = anchor[i] < 0 ? Int(-anchor[i]) : anchor[i];
      w[i] = anchor[i] < 0 ? -1 : 1;
      continue;
    }
    // g_new = x*g + y*anchor[i]
    Int a = g, b = anchor[i], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
      t = y0 - q * y1;
      y0 = y1;
      y1 = t;
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    for (Int& c : w) c *= x0;
    w[i] = y0;
    g = a;
  }
  return w;
}

std::string encode_function_block(const PLFunction& f) {
  std::string s;
  for (const Vec& gv : f.graph_vertices()) {
    for (const Int& x : gv) {
      s += x.str();
      s += ',';
    }
    s += ';';
  }
  return s;
}

std::string code_general(const CDP& c) {
  const int d = c.base().dim();
  const size_t n = c.n();
  std::optional<std::string> best;

  for (const Vec& p : c.base().interior_lattice_points()) {
    CDP at_p = apply_move(c, TransformBase{UnimodularAffineMap::translation_by(negate(p))});
    for (const UnimodularAffineMap& U : base_automorphisms(at_p.base())) {
      CDP cur = apply_move(at_p, TransformBase{U});
      auto shifts = try_shifts_at(cur, Vec(d, 0));
      if (!shifts) continue;
      Int ssum = 0;
      for (const Int& s : *shifts) ssum += s;
      if (ssum != Int(n) - 2) continue;
      bool cond4 = true;
      for (const Facet& f : cur.base().facets()) {
        if (f.offset == 1 || f.offset == -1) continue;
        std::vector<Vec> fv = cur.base().facet_vertices(f);
        RatVec bary(d, Rat(0));
        for (const Vec& v : fv) {
          if (sum_at(cur, to_rat(v)) != 0) cond4 = false;
          for (int i = 0; i < d; ++i) bary[i] += Rat(v[i]);
        }
        if (!cond4) break;
        for (int i = 0; i < d; ++i) bary[i] /= Rat(Int(fv.size()));
        if (sum_at(cur, bary) != 0) {
          cond4 = false;
          break;
        }
      }
      if (!cond4) continue;

      std::vector<PLFunction> primes;
      for (size_t i = 0; i < n; ++i) primes.push_back(cur.functions()[i].shifted((*shifts)[i]));

      // anchor shear reduction along a single dual direction; the residual
      // shear directions are not quotiented, hence best effort
      Vec anchor;
      for (const Vec& q : cur.base().lattice_points()) {
        if (cur.base().strictly_contains(q)) continue;
        if (anchor.empty() || lex_less(q, anchor)) anchor = q;
      }
      Int g = gcd_of(anchor);
      Vec bstar = dual_for(anchor);

      std::string header = "B";
      for (const Vec& v : cur.base().vertices()) {
        for (const Int& x : v) {
          header += x.str();
          header += ',';
        }
        header += ';';
      }
      header += '#';

      for (size_t j = 0; j < n; ++j) {
        std::vector<Int> q(n, 0);
        Int total = 0;
        for (size_t i = 0; i < n; ++i) {
          if (i == j) continue;
          Rat val = primes[i].evaluate(to_rat(anchor));
          q[i] = floor_rat(val / Rat(g));
          total += q[i];
        }
        q[j] = -total;
        std::vector<std::string> blocks;
        for (size_t i = 0; i < n; ++i) {
          std::vector<Vec> pts;
          for (const Vec& sp : primes[i].support_points()) {
            Vec u(sp.begin(), sp.end() - 1);
            Vec np = sp;
            np.back() -= q[i] * dot(u, bstar);
            pts.push_back(std::move(np));
          }
          blocks.push_back(encode_function_block(PLFunction(cur.base_ptr(), std::move(pts))));
        }
        std::sort(blocks.begin(), blocks.end());
        std::string cand = header;
        for (const std::string& b : blocks) {
          cand += b;
          cand += '|';
        }
        if (!best || cand < *best) best = std::move(cand);
      }
    }
  }
  if (!best) throw std::logic_error("canonical_code: no certifying placement found");
  return *best;
}

}  // namespace

NormalizeResult normalize(const CDP& c, const FanoCertificate& cert) {
  if (!check_certificate(c, cert)) throw std::invalid_argument("normalize: invalid certificate");

  std::vector<Move> moves;
  CDP cur = c;
  std::vector<Int> a = cert.a;
  if (!is_zero(cert.origin)) {
    Move m = TransformBase{UnimodularAffineMap::translation_by(negate(cert.origin))};
    cur = apply_move(cur, m);
    moves.push_back(std::move(m));
  }

  while (cur.n() > 2) {
    size_t i = 0;
    for (; i < cur.n(); ++i)
      if (eliminable(cur.functions()[i])) break;
    if (i == cur.n()) break;
    size_t j = (i == 0) ? 1 : 0;
    const size_t n = cur.n();

    const AffinePiece& piece = cur.functions()[i].pieces().front();
    Vec grad = to_int(piece.gradient);
    if (!is_zero(grad)) {
      std::vector<Int> beta(n, 0);
      beta[i] = -1;
      beta[j] = 1;
      Move m = Shear{grad, std::move(beta)};
      cur = apply_move(cur, m);
      moves.push_back(std::move(m));
    }
    Rat c0r = cur.functions()[i].pieces().front().constant;
    Int c0 = numerator(c0r);
    if (c0 != 0) {
      std::vector<Int> alpha(n, 0);
      alpha[i] = -c0;
      alpha[j] = c0;
      Move m = Translate{std::move(alpha)};
      cur = apply_move(cur, m);
      moves.push_back(std::move(m));
      a[i] += c0;
      a[j] -= c0;
    }
    if (i != n - 1) {
      std::vector<size_t> perm(n);
      for (size_t k = 0; k < n; ++k) perm[k] = k;
      std::swap(perm[i], perm[n - 1]);
      Move m = Permute{std::move(perm)};
      cur = apply_move(cur, m);
      moves.push_back(std::move(m));
      std::swap(a[i], a[n - 1]);
    }
    if (a.back() != 0) throw std::logic_error("normalize: eliminated function has nonzero a");
    Move m = RemoveZero{};
    cur = apply_move(cur, m);
    moves.push_back(std::move(m));
    a.pop_back();
  }

  FanoCertificate out_cert{Vec(c.base().dim(), 0), std::move(a)};
  bool toric = cur.n() <= 2;
  cur.certificate = out_cert;
  return NormalizeResult{std::move(cur), std::move(out_cert), std::move(moves), toric};
}

ToricResult is_toric(const CDP& c) { return ToricResult{count_noneliminable(c) <= 2, true}; }

CanonicalCode canonical_code(const CDP& c, const FanoCertificate& cert) {
  if (!check_certificate(c, cert)) throw std::invalid_argument("canonical_code: invalid certificate");
  for (const PLFunction& f : c.functions()) {
    if (f.is_zero_function()) {
      // strip zero functions (a_i = 0 for a zero function at height one)
      std::vector<PLFunction> fns;
      std::vector<Int> a;
      for (size_t i = 0; i < c.n(); ++i) {
        if (c.functions()[i].is_zero_function()) continue;
        fns.push_back(c.functions()[i]);
        a.push_back(cert.a[i]);
      }
      CDP stripped(c.base_ptr(), std::move(fns));
      return canonical_code(stripped, FanoCertificate{cert.origin, std::move(a)});
    }
  }
  if (c.base().dim() == 1) return CanonicalCode{code_1d(c), false};
  return CanonicalCode{code_general(c), true};
}

bool equivalent(const CDP& a, const CDP& b) {
  auto ra = find_certificate(a);
  auto rb = find_certificate(b);
  if (!certified(ra) || !certified(rb)) throw std::invalid_argument("equivalent: inputs must be Fano");
  for (const CDP* c : {&a, &b})
    for (const PLFunction& f : c->functions())
      if (eliminable(f)) throw std::invalid_argument("equivalent: inputs must be normalized");
  if (a.base().dim() != b.base().dim()) return false;
  return canonical_code(a, std::get<FanoCertificate>(ra)) ==
         canonical_code(b, std::get<FanoCertificate>(rb));
}

}  // namespace cdp
