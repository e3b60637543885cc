#include "cdp/plfunction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdp {

PLFunction::PLFunction(std::shared_ptr<const LatticePolytope> base, std::vector<Vec> support_points)
    : base_(std::move(base)), support_(std::move(support_points)) {
  if (!base_) throw std::invalid_argument("PLFunction: null base");
  int d = base_->dim();
  if (support_.empty()) throw std::invalid_argument("PLFunction: empty support");
  for (const Vec& p : support_)
    if (static_cast<int>(p.size()) != d + 1)
      throw std::invalid_argument("PLFunction: support point dimension mismatch");

  // projection of conv(support) must equal the base exactly
  std::vector<Vec> proj;
  proj.reserve(support_.size());
  for (const Vec& p : support_) proj.emplace_back(p.begin(), p.end() - 1);
  LatticePolytope shadow = LatticePolytope::from_points(proj);
  if (!(shadow == *base_))
    throw std::invalid_argument("PLFunction: support does not project onto the base");

  for (const UpperFacet& uf : upper_hull(support_)) {
    Int lambda = uf.normal.back();
    RatVec gradient(d);
    Vec gradient_num(d);
    for (int j = 0; j < d; ++j) {
      gradient[j] = Rat(-uf.normal[j], lambda);
      gradient_num[j] = -uf.normal[j];
    }
    std::vector<Vec> reg;
    reg.reserve(uf.points.size());
    for (const Vec& p : uf.points) reg.emplace_back(p.begin(), p.end() - 1);
    pieces_.push_back(AffinePiece{LatticePolytope::from_points(std::move(reg)),
                                  std::move(gradient), Rat(uf.offset, lambda), uf.normal,
                                  uf.offset, std::move(gradient_num), lambda});
  }
}

Rat PLFunction::evaluate(const RatVec& u) const {
  if (!base_->contains(u)) throw std::invalid_argument("PLFunction::evaluate: point outside base");
  Rat best;
  bool first = true;
  for (const AffinePiece& p : pieces_) {
    Rat v = p.value(u);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

Rat PLFunction::evaluate_at_origin() const {
  return evaluate(RatVec(base_->dim(), Rat(0)));
}

std::vector<LatticePolytope> PLFunction::regions_of_linearity() const {
  std::vector<LatticePolytope> out;
  out.reserve(pieces_.size());
  for (const AffinePiece& p : pieces_) out.push_back(p.region);
  return out;
}

std::vector<Vec> PLFunction::graph_vertices() const {
  std::vector<Vec> out;
  for (const AffinePiece& p : pieces_) {
    for (const Vec& v : p.region.vertices()) {
      Rat y = p.value(to_rat(v));
      if (!is_integer(y)) throw std::logic_error("PLFunction: non-integral graph vertex");
      Vec g = v;
      g.push_back(numerator(y));
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PLFunction PLFunction::stripped() const { return PLFunction(base_, graph_vertices()); }

PLFunction PLFunction::shifted(const Int& c) const {
  std::vector<Vec> pts = support_;
  for (Vec& p : pts) p.back() += c;
  return PLFunction(base_, std::move(pts));
}

bool PLFunction::has_integral_slope() const {
  if (pieces_.size() != 1) return false;
  for (const Rat& g : pieces_[0].gradient)
    if (!is_integer(g)) return false;
  return true;
}

bool PLFunction::is_zero_function() const {
  if (pieces_.size() != 1) return false;
  const AffinePiece& p = pieces_[0];
  if (p.constant != 0) return false;
  for (const Rat& g : p.gradient)
    if (g != 0) return false;
  return true;
}

bool PLFunction::same_function(const PLFunction& o) const {
  return *base_ == *o.base_ && graph_vertices() == o.graph_vertices();
}

CDP::CDP(std::shared_ptr<const LatticePolytope> base, std::vector<PLFunction> functions)
    : base_(std::move(base)), functions_(std::move(functions)) {
  if (!base_) throw std::invalid_argument("CDP: null base");
  if (functions_.empty()) throw std::invalid_argument("CDP: needs at least one function");
  for (const PLFunction& f : functions_)
    if (!(f.base() == *base_)) throw std::invalid_argument("CDP: functions must share the base");
}

Rat sum_at(const CDP& c, const RatVec& u) {
  Rat s = 0;
  for (const PLFunction& f : c.functions()) s += f.evaluate(u);
  return s;
}

bool check_positivity(const CDP& c) {
  for (const Vec& v : c.base().vertices())
    if (sum_at(c, to_rat(v)) < 0) return false;
  return sum_at(c, c.base().barycenter()) > 0;
}

bool validate_cdp(const CDP& c) { return check_positivity(c); }

bool is_integral(const PLFunction& f, const Int& certificate_shift) {
  Vec origin(f.base().dim(), 0);
  if (!f.base().strictly_contains(origin))
    throw std::invalid_argument("is_integral: origin not interior to the base");
  for (const AffinePiece& p : f.pieces()) {
    Int shifted_offset = p.graph_offset + p.graph_normal.back() * certificate_shift;
    if (shifted_offset != 1 && shifted_offset != -1)
      throw std::invalid_argument("is_integral: f + shift is not at height one");
  }
  return f.evaluate_at_origin() + Rat(certificate_shift) == 1;
}

bool is_linear_along(const PLFunction& f, const Vec& v) {
  Vec origin(f.base().dim(), 0);
  if (!f.base().strictly_contains(origin))
    throw std::invalid_argument("is_linear_along: origin not interior to the base");
  auto [fwd, bwd] = boundary_hits(f.base(), v);
  RatVec a(v.size()), b(v.size()), mid(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    a[i] = fwd * Rat(v[i]);
    b[i] = -bwd * Rat(v[i]);
    mid[i] = (a[i] + b[i]) / 2;
  }
  // concavity makes midpoint equality equivalent to linearity on the segment
  return f.evaluate(mid) * 2 == f.evaluate(a) + f.evaluate(b);
}

}  // namespace cdp
