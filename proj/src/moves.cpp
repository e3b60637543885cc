#include "cdp/moves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdp {

namespace {

PLFunction zero_function(const std::shared_ptr<const LatticePolytope>& base) {
  std::vector<Vec> pts;
  for (const Vec& v : base->vertices()) {
    Vec p = v;
    p.push_back(0);
    pts.push_back(std::move(p));
  }
  return PLFunction(base, std::move(pts));
}

void require_zero_sum(const std::vector<Int>& xs, const char* what) {
  Int s = 0;
  for (const Int& x : xs) s += x;
  if (s != 0) throw std::invalid_argument(std::string(what) + ": coefficients must sum to zero");
}

}  // namespace

CDP apply_move(const CDP& c, const Move& m) {
  const size_t n = c.n();
  const int d = c.base().dim();

  if (std::holds_alternative<AddZero>(m)) {
    std::vector<PLFunction> fns = c.functions();
    fns.push_back(zero_function(c.base_ptr()));
    return CDP(c.base_ptr(), std::move(fns));
  }

  if (std::holds_alternative<RemoveZero>(m)) {
    if (n < 2) throw std::invalid_argument("RemoveZero: need at least two functions");
    if (!c.functions().back().is_zero_function())
      throw std::invalid_argument("RemoveZero: last function is not identically zero");
    std::vector<PLFunction> fns(c.functions().begin(), c.functions().end() - 1);
    return CDP(c.base_ptr(), std::move(fns));
  }

  if (const auto* p = std::get_if<Permute>(&m)) {
    if (p->perm.size() != n) throw std::invalid_argument("Permute: wrong length");
    std::vector<bool> seen(n, false);
    for (size_t i : p->perm) {
      if (i >= n || seen[i]) throw std::invalid_argument("Permute: not a permutation");
      seen[i] = true;
    }
    std::vector<PLFunction> fns;
    fns.reserve(n);
    for (size_t i = 0; i < n; ++i) fns.push_back(c.functions()[p->perm[i]]);
    return CDP(c.base_ptr(), std::move(fns));
  }

  if (const auto* t = std::get_if<TransformBase>(&m)) {
    if (t->map.dim() != d) throw std::invalid_argument("TransformBase: dimension mismatch");
    std::vector<Vec> verts;
    for (const Vec& v : c.base().vertices()) verts.push_back(t->map.apply(v));
    auto base = std::make_shared<const LatticePolytope>(LatticePolytope::from_points(verts));
    std::vector<PLFunction> fns;
    for (const PLFunction& f : c.functions()) {
      std::vector<Vec> pts;
      for (const Vec& sp : f.support_points()) {
        Vec u(sp.begin(), sp.end() - 1);
        Vec q = t->map.apply(u);
        q.push_back(sp.back());
        pts.push_back(std::move(q));
      }
      fns.emplace_back(base, std::move(pts));
    }
    return CDP(base, std::move(fns));
  }

  if (const auto* t = std::get_if<Translate>(&m)) {
    if (t->alpha.size() != n) throw std::invalid_argument("Translate: wrong length");
    require_zero_sum(t->alpha, "Translate");
    std::vector<PLFunction> fns;
    for (size_t i = 0; i < n; ++i) fns.push_back(c.functions()[i].shifted(t->alpha[i]));
    return CDP(c.base_ptr(), std::move(fns));
  }

  const auto& s = std::get<Shear>(m);
  if (static_cast<int>(s.v.size()) != d) throw std::invalid_argument("Shear: v dimension mismatch");
  if (s.beta.size() != n) throw std::invalid_argument("Shear: wrong length");
  require_zero_sum(s.beta, "Shear");
  std::vector<PLFunction> fns;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Vec> pts;
    for (const Vec& sp : c.functions()[i].support_points()) {
      Vec u(sp.begin(), sp.end() - 1);
      Vec q = sp;
      q.back() += s.beta[i] * dot(u, s.v);
      pts.push_back(std::move(q));
    }
    fns.emplace_back(c.base_ptr(), std::move(pts));
  }
  return CDP(c.base_ptr(), std::move(fns));
}

Move inverse(const Move& m) {
  if (std::holds_alternative<AddZero>(m)) return RemoveZero{};
  if (std::holds_alternative<RemoveZero>(m)) return AddZero{};
  if (const auto* p = std::get_if<Permute>(&m)) {
    std::vector<size_t> inv(p->perm.size());
    for (size_t i = 0; i < p->perm.size(); ++i) inv[p->perm[i]] = i;
    return Permute{std::move(inv)};
  }
  if (const auto* t = std::get_if<TransformBase>(&m)) return TransformBase{t->map.inverse()};
  if (const auto* t = std::get_if<Translate>(&m)) {
    std::vector<Int> a;
    for (const Int& x : t->alpha) a.push_back(-x);
    return Translate{std::move(a)};
  }
  const auto& s = std::get<Shear>(m);
  std::vector<Int> b;
  for (const Int& x : s.beta) b.push_back(-x);
  return Shear{s.v, std::move(b)};
}

}  // namespace cdp
