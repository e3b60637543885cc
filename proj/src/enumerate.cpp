#include "cdp/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <sstream>

#include "poly1.hpp"

namespace cdp {

namespace {

using poly1::Poly;
using poly1::Pt;

struct BudgetExceeded {
  std::uint64_t used;
};

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t max_nodes;
  void tick() {
    if (++used > max_nodes) throw BudgetExceeded{used};
  }
};

// ---------------------------------------------------------------------------
// one-dimensional bases: candidate functions are concave height-one polylines
// ---------------------------------------------------------------------------

struct Candidate1 {
  Poly f;
  std::vector<Rat> values;  // at integer points -l..r
  std::string key;
};

struct Gen1Config {
  Int l, r;
  std::vector<Rat> lo, hi;  // pointwise vertex-value bounds, index x + l
  std::optional<Int> fixed_left, fixed_right;
  bool exclude_integral_lines = true;
  bool endpoint_sign_prune = false;  // keep only candidates with value <= 0 at -1 or at 1
};

void gen_polylines_rec(const Gen1Config& cfg, Budget& budget, Poly& cur,
                       std::vector<Candidate1>& out) {
  const Pt last = cur.v.back();
  for (Int x = last.first + 1; x <= cfg.r; ++x) {
    size_t ix = static_cast<size_t>(x + cfg.l);
    Int ylo = ceil_rat(cfg.lo[ix]), yhi = floor_rat(cfg.hi[ix]);
    if (x == cfg.r && cfg.fixed_right) {
      if (*cfg.fixed_right < ylo || *cfg.fixed_right > yhi) continue;
      ylo = yhi = *cfg.fixed_right;
    }
    for (Int y = ylo; y <= yhi; ++y) {
      budget.tick();
      if (cur.v.size() >= 2) {
        const Pt& prev = cur.v[cur.v.size() - 2];
        Int dx1 = last.first - prev.first, dy1 = last.second - prev.second;
        Int dx2 = x - last.first, dy2 = y - last.second;
        if (dy2 * dx1 >= dy1 * dx2) continue;  // slopes must strictly decrease
      }
      Int level = poly1::segment_level(last, {x, y});
      if (level != 1 && level != -1) continue;
      cur.v.push_back({x, y});
      if (x == cfg.r) {
        bool keep = poly1::value(cur, 0) > 0;
        if (keep && cfg.exclude_integral_lines && poly1::linear_with_integer_slope(cur))
          keep = false;
        if (keep && cfg.endpoint_sign_prune && poly1::value(cur, -1) > 0 &&
            poly1::value(cur, 1) > 0)
          keep = false;
        if (keep) {
          Candidate1 c;
          c.f = cur;
          for (Int t = -cfg.l; t <= cfg.r; ++t) c.values.push_back(poly1::value(cur, Rat(t)));
          c.key = poly1::encode(cur);
          out.push_back(std::move(c));
        }
      } else {
        gen_polylines_rec(cfg, budget, cur, out);
      }
      cur.v.pop_back();
    }
  }
}

std::vector<Candidate1> gen_polylines(const Gen1Config& cfg, Budget& budget) {
  std::vector<Candidate1> out;
  Int ylo = ceil_rat(cfg.lo[0]), yhi = floor_rat(cfg.hi[0]);
  if (cfg.fixed_left) {
    if (*cfg.fixed_left < ylo || *cfg.fixed_left > yhi) return out;
    ylo = yhi = *cfg.fixed_left;
  }
  for (Int y = ylo; y <= yhi; ++y) {
    Poly cur;
    cur.v.push_back({-cfg.l, y});
    gen_polylines_rec(cfg, budget, cur, out);
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate1& a, const Candidate1& b) { return a.key < b.key; });
  return out;
}

// shape restriction for the long-base cells: an integral translated function
// has its only interior vertex above the origin; a non-integral one is either
// a single-vertex plateau at height one or a line
bool shape_admissible(const Poly& f, const Int& r) {
  if (poly1::value(f, 0) == 1)
    return f.v.size() == 3 && f.v[1] == Pt{0, 1} && f.v[2].first == r;
  if (f.v.size() == 2) return true;  // integral endpoints force the slope denominator to divide m
  return f.v.size() == 3 && f.v[1].second == 1 && f.v[2] == Pt{r, Int(1)};
}

std::vector<EnumeratedClass> enumerate_1d(const LatticePolytope& box, int n,
                                          const EnumerationOptions& opts, Budget& budget) {
  const Int lo_x = box.vertices().front()[0], hi_x = box.vertices().back()[0];
  const Int l = -lo_x, r = hi_x;
  const Int m = l + r;
  const int slots = n - 1;  // anchored slots; the last function compensates
  const Rat need = Rat(Int(n) - 2);

  // Anchored slots have value in [0, l) at -l and at most 1 at the origin, so
  // concavity bounds them by x + 2l - 1 left of the origin and 1 + x/l right
  // of it. The free slot is bounded through the boundary inequality applied to
  // these, and every slot is bounded below by the boundary inequality against
  // the other slots' upper bounds.
  auto hiA = [&](const Int& x) -> Rat {
    return x <= 0 ? Rat(x + 2 * l - 1) : Rat(1) + Rat(x, l);
  };
  const Rat lo_end_minus = need - Rat(Int(slots)) * hiA(-l);
  const Rat lo_end_plus = need - Rat(Int(slots)) * hiA(r);
  auto hiB = [&](const Int& x) -> Rat {
    if (x == 0) return 1;
    if (x > 0) return Rat(1) + Rat(x) * (Rat(1) - lo_end_minus) / Rat(l);
    return Rat(1) + Rat(-x) * (Rat(1) - lo_end_plus) / Rat(r);
  };
  auto loB = [&](const Int& x) -> Rat { return need - Rat(Int(slots)) * hiA(x); };
  auto loA = [&](const Int& x) -> Rat { return need - Rat(Int(n) - 3) * hiA(x) - hiB(x); };

  Gen1Config cfgA;
  cfgA.l = l;
  cfgA.r = r;
  for (Int x = -l; x <= r; ++x) {
    cfgA.lo.push_back(loA(x));
    cfgA.hi.push_back(hiA(x));
  }
  cfgA.lo[0] = std::max(cfgA.lo[0], Rat(0));
  cfgA.hi[0] = std::min(cfgA.hi[0], Rat(l - 1));

  const size_t npts = static_cast<size_t>(m) + 1;
  std::map<std::string, EnumeratedClass> classes;
  std::vector<size_t> chosen;
  std::vector<Rat> partial(npts, Rat(0));
  std::vector<Candidate1> cand_a;

  auto base = std::make_shared<const LatticePolytope>(box);

  std::function<void(size_t, size_t)> rec = [&](size_t slot, size_t start) {
    if (slot == static_cast<size_t>(slots)) {
      Gen1Config cfgB;
      cfgB.l = l;
      cfgB.r = r;
      for (Int x = -l; x <= r; ++x) {
        size_t ix = static_cast<size_t>(x + l);
        cfgB.lo.push_back(std::max(loB(x), Rat(need - partial[ix])));
        cfgB.hi.push_back(hiB(x));
      }
      cfgB.endpoint_sign_prune = opts.structural_pruning;
      // base facets away from height one pin the sum of the translated
      // functions there, which pins the free slot's endpoint values
      if (l != 1) {
        Rat pin = need - partial[0];
        if (!is_integer(pin)) return;
        cfgB.fixed_left = numerator(pin);
      }
      if (r != 1) {
        Rat pin = need - partial[npts - 1];
        if (!is_integer(pin)) return;
        cfgB.fixed_right = numerator(pin);
      }
      for (Candidate1& b : gen_polylines(cfgB, budget)) {
        bool ok = true;
        for (size_t ix = 0; ix < npts && ok; ++ix) {
          Rat total = partial[ix] + b.values[ix];
          bool boundary = ix == 0 || ix == npts - 1;
          if (boundary ? total < need : total <= need) ok = false;
        }
        if (!ok) continue;
        std::vector<Int> a(n, -1);
        a.back() = Int(n) - 3;
        std::vector<PLFunction> fns;
        for (size_t k : chosen) {
          std::vector<Vec> pts;
          for (const Pt& pt : cand_a[k].f.v) pts.push_back({pt.first, pt.second});
          fns.emplace_back(base, std::move(pts));
        }
        std::vector<Vec> pts;
        for (const Pt& pt : b.f.v) pts.push_back({pt.first, pt.second - (Int(n) - 2)});
        fns.emplace_back(base, std::move(pts));
        CDP cdp(base, std::move(fns));
        FanoCertificate cert{{Int(0)}, std::move(a)};
        cdp.certificate = cert;
        CanonicalCode code = canonical_code(cdp, cert);
        if (!classes.count(code.bytes))
          classes.emplace(code.bytes, EnumeratedClass{std::move(cdp), std::move(cert), code});
      }
      return;
    }
    for (size_t k = start; k < cand_a.size(); ++k) {
      budget.tick();
      for (size_t ix = 0; ix < npts; ++ix) partial[ix] += cand_a[k].values[ix];
      chosen.push_back(k);
      Rat remA = Rat(Int(slots) - Int(chosen.size()));
      bool feasible = true;
      for (size_t ix : {size_t(0), npts - 1}) {
        Int x = Int(ix) - l;
        if (partial[ix] + remA * hiA(x) + hiB(x) < need) feasible = false;
      }
      if (feasible) rec(slot + 1, k);
      chosen.pop_back();
      for (size_t ix = 0; ix < npts; ++ix) partial[ix] -= cand_a[k].values[ix];
    }
  };

  try {
    cand_a = gen_polylines(cfgA, budget);
    if (opts.structural_pruning && l == 1 && m > 2)
      std::erase_if(cand_a, [&](const Candidate1& c) { return !shape_admissible(c.f, r); });
    rec(0, 0);
  } catch (const BudgetExceeded& e) {
    std::ostringstream os;
    os << "box=[" << (-l) << "," << r << "] n=" << n << " slots=[";
    for (size_t k : chosen) os << k << ",";
    os << "] of " << cand_a.size() << " anchored candidates";
    throw PartialResultError(e.used, os.str());
  }

  std::vector<EnumeratedClass> out;
  for (auto& [key, ec] : classes) out.push_back(std::move(ec));
  return out;
}

// ---------------------------------------------------------------------------
// higher-dimensional bases (experimental)
// ---------------------------------------------------------------------------

struct CandidateG {
  PLFunction f;
  std::string key;
};

std::vector<CandidateG> gen_functions_general(const std::shared_ptr<const LatticePolytope>& base,
                                              const std::vector<Vec>& points,
                                              const std::vector<Rat>& lo,
                                              const std::vector<Rat>& hi, bool anchored,
                                              Budget& budget) {
  const int d = base->dim();
  std::vector<CandidateG> out;
  std::vector<std::optional<Int>> assign(points.size());
  std::vector<bool> must(points.size(), false);
  for (size_t i = 0; i < points.size(); ++i)
    must[i] = std::find(base->vertices().begin(), base->vertices().end(), points[i]) !=
              base->vertices().end();

  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == points.size()) {
      std::vector<Vec> support;
      for (size_t k = 0; k < points.size(); ++k) {
        if (!assign[k]) continue;
        Vec p = points[k];
        p.push_back(*assign[k]);
        support.push_back(std::move(p));
      }
      std::sort(support.begin(), support.end(), lex_less);
      PLFunction f(base, support);
      if (f.graph_vertices() != support) return;  // keep canonical supports only
      for (const AffinePiece& p : f.pieces())
        if (p.graph_offset != 1 && p.graph_offset != -1) return;
      if (f.evaluate_at_origin() <= 0) return;
      if (f.is_linear() && f.has_integral_slope()) return;
      if (anchored) {
        for (int j = 0; j < d; ++j) {
          Vec e(d, 0);
          e[j] = 1;
          Rat v = f.evaluate(to_rat(e));
          if (v < 0 || v >= 1) return;
        }
      }
      std::string key;
      for (const Vec& gv : f.graph_vertices())
        for (const Int& x : gv) key += x.str() + ",";
      out.push_back(CandidateG{std::move(f), std::move(key)});
      return;
    }
    budget.tick();
    if (!must[i]) {
      assign[i] = std::nullopt;
      rec(i + 1);
    }
    for (Int y = ceil_rat(lo[i]); y <= floor_rat(hi[i]); ++y) {
      assign[i] = y;
      rec(i + 1);
    }
    assign[i] = std::nullopt;
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const CandidateG& a, const CandidateG& b) { return a.key < b.key; });
  return out;
}

std::vector<EnumeratedClass> enumerate_general(const LatticePolytope& box, int n,
                                               const EnumerationOptions& opts, Budget& budget) {
  const int d = box.dim();
  for (int j = 0; j < d; ++j) {
    Vec e(d, 0);
    e[j] = 1;
    if (!box.contains(e) || !box.contains(negate(e)))
      throw std::invalid_argument(
          "enumerate_fixed_base: the experimental search over bases of dimension >= 2 "
          "needs the unit cross polytope inside the box for its shear anchors");
  }
  auto base = std::make_shared<const LatticePolytope>(box);
  std::vector<Vec> points = box.lattice_points();
  const Rat need = Rat(Int(n) - 2);

  // Seed bounds at the origin and at +-e_j: anchored slots satisfy
  // 0 <= f(e_j) < 1 and f(0) <= 1, hence f(-e_j) <= 2 by concavity; the free
  // slot is bounded through the boundary inequality. Arbitrary lattice points
  // are then bounded by writing 0 as a convex combination of u, the opposite
  // unit vectors and nothing else.
  const Rat hiA_plus = 1, hiA_minus = 2;
  const Rat loB_plus = need - Rat(Int(n) - 1) * hiA_plus;
  const Rat loB_minus = need - Rat(Int(n) - 1) * hiA_minus;
  const Rat hiB_plus = Rat(2) - loB_minus;
  const Rat hiB_minus = Rat(2) - loB_plus;
  const Rat loA_plus = need - Rat(Int(n) - 2) * hiA_plus - hiB_plus;
  const Rat loA_minus = need - Rat(Int(n) - 2) * hiA_minus - hiB_minus;

  auto extend_hi = [&](const Vec& u, const Rat& hi_plus, const Rat& hi_minus, const Rat& lo_plus,
                       const Rat& lo_minus) -> Rat {
    Int norm1 = 0, nonzero = 0;
    for (const Int& x : u) {
      norm1 += x < 0 ? -x : x;
      nonzero += x != 0 ? 1 : 0;
    }
    if (norm1 == 0) return 1;
    if (norm1 == 1) {
      for (const Int& x : u)
        if (x != 0) return x > 0 ? hi_plus : hi_minus;
    }
    Rat bound = Rat(1 + norm1);
    for (size_t j = 0; j < u.size(); ++j) {
      if (u[j] == 0) continue;
      Rat mag = Rat(u[j] < 0 ? -u[j] : u[j]);
      bound -= mag * (u[j] > 0 ? lo_minus : lo_plus);  // seed opposite to u_j
    }
    return bound;
  };

  std::vector<Rat> hiA, loA, hiB, loB;
  for (const Vec& u : points) {
    hiA.push_back(extend_hi(u, hiA_plus, hiA_minus, loA_plus, loA_minus));
    hiB.push_back(extend_hi(u, hiB_plus, hiB_minus, loB_plus, loB_minus));
  }
  for (size_t i = 0; i < points.size(); ++i) {
    loA.push_back(need - Rat(Int(n) - 3) * hiA[i] - hiB[i]);
    loB.push_back(need - Rat(Int(n) - 1) * hiA[i]);
  }

  std::map<std::string, EnumeratedClass> classes;
  std::vector<size_t> chosen;
  std::vector<CandidateG> cand_a, cand_b;

  std::function<void(size_t, size_t)> rec = [&](size_t slot, size_t start) {
    if (slot + 1 == static_cast<size_t>(n)) {
      for (const CandidateG& b : cand_b) {
        budget.tick();
        std::vector<const PLFunction*> primes;
        for (size_t k : chosen) primes.push_back(&cand_a[k].f);
        primes.push_back(&b.f);
        auto total = [&](const RatVec& u) {
          Rat s = 0;
          for (const PLFunction* f : primes) s += f->evaluate(u);
          return s;
        };
        bool ok = true;
        for (const Vec& v : box.vertices())
          if (total(to_rat(v)) < need) ok = false;
        if (ok && total(box.barycenter()) <= need) ok = false;
        for (const Facet& fc : box.facets()) {
          if (!ok) break;
          if (fc.offset == 1 || fc.offset == -1) continue;
          std::vector<Vec> fv = box.facet_vertices(fc);
          RatVec bary(d, Rat(0));
          for (const Vec& v : fv) {
            if (total(to_rat(v)) != need) ok = false;
            for (int i = 0; i < d; ++i) bary[i] += Rat(v[i]);
          }
          if (!ok) break;
          for (int i = 0; i < d; ++i) bary[i] /= Rat(Int(fv.size()));
          if (total(bary) != need) ok = false;
        }
        if (!ok) continue;
        std::vector<Int> a(n, -1);
        a.back() = Int(n) - 3;
        std::vector<PLFunction> fns;
        for (size_t k : chosen) fns.push_back(cand_a[k].f);
        fns.push_back(b.f.shifted(-(Int(n) - 2)));
        CDP cdp(base, std::move(fns));
        FanoCertificate cert{Vec(d, 0), std::move(a)};
        cdp.certificate = cert;
        CanonicalCode code = canonical_code(cdp, cert);
        if (!classes.count(code.bytes))
          classes.emplace(code.bytes, EnumeratedClass{std::move(cdp), std::move(cert), code});
      }
      return;
    }
    for (size_t k = start; k < cand_a.size(); ++k) {
      budget.tick();
      chosen.push_back(k);
      rec(slot + 1, k);
      chosen.pop_back();
    }
  };

  try {
    cand_a = gen_functions_general(base, points, loA, hiA, true, budget);
    cand_b = gen_functions_general(base, points, loB, hiB, false, budget);
    rec(0, 0);
  } catch (const BudgetExceeded& e) {
    std::ostringstream os;
    os << "dim=" << d << " n=" << n << " slots=[";
    for (size_t k : chosen) os << k << ",";
    os << "] of " << cand_a.size() << "/" << cand_b.size() << " candidates";
    throw PartialResultError(e.used, os.str());
  }

  std::vector<EnumeratedClass> out;
  for (auto& [key, ec] : classes) out.push_back(std::move(ec));
  return out;
}

}  // namespace

std::vector<EnumeratedClass> enumerate_fixed_base(const LatticePolytope& box, int n,
                                                  const EnumerationOptions& opts) {
  if (!box.strictly_contains(Vec(box.dim(), 0)))
    throw std::invalid_argument("enumerate_fixed_base: origin must be interior to the box");
  if (n < 1) throw std::invalid_argument("enumerate_fixed_base: n must be positive");
  if (box.dim() == 1 && n > 4)
    throw std::invalid_argument("enumerate_fixed_base: n exceeds c(box) = 4");
  if (n <= 2) return {};  // a normalized CDP with n <= 2 is toric

  // A Fano CDP over this box may only certify at an interior lattice point
  // away from the origin, so sweep every placement: enumerate height-one
  // presentations over the translated box and carry the classes back.
  Budget budget{0, opts.max_nodes};
  std::map<std::string, EnumeratedClass> dedup;
  for (const Vec& p : box.interior_lattice_points()) {
    std::vector<Vec> shifted_verts;
    for (const Vec& v : box.vertices()) shifted_verts.push_back(sub(v, p));
    LatticePolytope shifted = LatticePolytope::from_points(std::move(shifted_verts));
    std::vector<EnumeratedClass> found = box.dim() == 1
                                             ? enumerate_1d(shifted, n, opts, budget)
                                             : enumerate_general(shifted, n, opts, budget);
    for (EnumeratedClass& ec : found) {
      if (dedup.count(ec.code.bytes)) continue;
      if (!is_zero(p)) {
        CDP back = apply_move(ec.cdp, TransformBase{UnimodularAffineMap::translation_by(p)});
        FanoCertificate cert{p, ec.cert.a};
        back.certificate = cert;
        ec = EnumeratedClass{std::move(back), std::move(cert), ec.code};
      }
      dedup.emplace(ec.code.bytes, std::move(ec));
    }
  }
  std::vector<EnumeratedClass> out;
  for (auto& [key, ec] : dedup) out.push_back(std::move(ec));
  return out;
}

ClassificationResult classify_2d(int threads) {
  // runtime cross-check of the base-length range before enumerating
  BranchSolutions bs = solve_branch_equation();
  if (bs.m_values != std::set<Int>{Int(3), Int(4), Int(6)})
    throw std::logic_error("classify_2d: branch equations disagree with m in {3,4,6}");

  const std::vector<std::pair<int, int>> cells = {{2, 3}, {2, 4}, {3, 3}, {4, 3}, {6, 3}};
  const std::map<std::pair<int, int>, int> expected = {
      {{2, 3}, 7}, {{2, 4}, 4}, {{3, 3}, 9}, {{4, 3}, 9}, {{6, 3}, 5}};

  auto run_cell = [](std::pair<int, int> cell) {
    auto box = LatticePolytope::from_points({{Int(-1)}, {Int(cell.first - 1)}});
    EnumerationOptions opts;
    opts.structural_pruning = true;
    return enumerate_fixed_base(box, cell.second, opts);
  };

  std::vector<std::vector<EnumeratedClass>> per_cell(cells.size());
  if (threads > 1) {
    std::vector<std::future<std::vector<EnumeratedClass>>> futs;
    for (auto cell : cells) futs.push_back(std::async(std::launch::async, run_cell, cell));
    for (size_t i = 0; i < cells.size(); ++i) per_cell[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < cells.size(); ++i) per_cell[i] = run_cell(cells[i]);
  }

  ClassificationResult result;
  for (size_t i = 0; i < cells.size(); ++i) {
    result.breakdown[cells[i]] = static_cast<int>(per_cell[i].size());
    for (EnumeratedClass& ec : per_cell[i]) result.classes.push_back(std::move(ec));
  }
  if (result.breakdown != expected || result.classes.size() != 34)
    throw std::logic_error("classify_2d: class counts disagree with the classification");
  return result;
}

BranchSolutions solve_branch_equation(int m_cap) {
  BranchSolutions out;

  // raw worked branch: m/l1 + m/l2 = m - 1 over divisors l_i >= 2 of m
  for (Int m = 2; m <= m_cap; ++m) {
    for (Int l1 = 2; l1 <= m; ++l1) {
      if (m % l1 != 0) continue;
      for (Int l2 = l1; l2 <= m; ++l2) {
        if (m % l2 != 0) continue;
        if (m / l1 + m / l2 == m - 1) out.worked_branch_raw.insert({m, l1, l2});
      }
    }
  }
  // With one lambda equal to 2 the equation becomes l2 = 2m/(m-2), so
  // (m-2) | 4 caps m independently of the sweep bound. The residual raw
  // solutions are the all-lambda>=3 family, which forces m = 3 and only
  // produces constant translated sums, already covered by the m = 3 cell.
  for (Int m = 3; m <= m_cap; ++m) {
    if (4 % (m - 2) != 0) continue;
    if ((2 * m) % (m - 2) != 0) continue;
    Int l2 = (2 * m) / (m - 2);
    if (l2 >= 2 && m % l2 == 0)
      out.worked_branch.insert({m, std::min(Int(2), l2), std::max(Int(2), l2)});
  }
  for (const auto& t : out.worked_branch_raw) {
    if (out.worked_branch.count(t)) continue;
    if (t[0] != 3) throw std::logic_error("solve_branch_equation: unexpected residual solution");
  }

  // All branches: endpoint values v1 + v2 + v3 = 1 with
  //   v_{1,2} in {m/lambda : lambda | m, lambda >= 2}   (non-integral line)
  //          or {1 - k(m-1) : k >= 0}                   (integral, vertex above 0)
  //   v_3    in {-m+2} or {1 - mu*m/(mu+1) : mu >= 1, (mu+1) | m}
  // A combination of three lines makes the translated sum constant, violating
  // the strict interior inequality, so those are skipped.
  struct Val {
    Rat v;
    bool line;
  };
  for (Int m = 3; m <= m_cap; ++m) {
    std::vector<Val> f12;
    for (Int lam = 2; lam <= m; ++lam)
      if (m % lam == 0) f12.push_back({Rat(m, lam), true});
    for (Int k = 0; k <= 4; ++k) f12.push_back({Rat(1 - k * (m - 1)), false});
    std::vector<Val> f3;
    f3.push_back({Rat(2 - m), false});
    for (Int mu = 1; mu + 1 <= m; ++mu)
      if (m % (mu + 1) == 0) f3.push_back({Rat(1) - Rat(mu * m, mu + 1), true});
    for (const Val& a : f12)
      for (const Val& b : f12)
        for (const Val& c : f3) {
          if (a.v + b.v + c.v != 1) continue;
          if (a.line && b.line && c.line) continue;
          out.m_values.insert(m);
        }
  }
  return out;
}

}  // namespace cdp
