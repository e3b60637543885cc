#include "poly1.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdp::poly1 {

std::pair<Int, Int> segment_direction(const Pt& a, const Pt& b) {
  Int dx = b.first - a.first, dy = b.second - a.second;
  if (dx <= 0) throw std::logic_error("poly1: segment not left-to-right");
  Int g = gcd(dx, dy < 0 ? Int(-dy) : dy);
  return {dx / g, dy / g};
}

Int segment_level(const Pt& a, const Pt& b) {
  auto [p, q] = segment_direction(a, b);
  return p * a.second - q * a.first;
}

Rat value(const Poly& f, const Rat& x) {
  if (x < Rat(f.left_x()) || x > Rat(f.right_x()))
    throw std::invalid_argument("poly1::value: x outside the domain");
  for (size_t i = 0; i + 1 < f.v.size(); ++i) {
    const Pt& a = f.v[i];
    const Pt& b = f.v[i + 1];
    if (x > Rat(b.first)) continue;
    return Rat(a.second) + (x - Rat(a.first)) * Rat(b.second - a.second, b.first - a.first);
  }
  return Rat(f.right_y());
}

bool is_concave_polyline(const Poly& f) {
  if (f.v.size() < 2) return false;
  for (size_t i = 0; i + 1 < f.v.size(); ++i)
    if (f.v[i + 1].first <= f.v[i].first) return false;
  for (size_t i = 0; i + 2 < f.v.size(); ++i) {
    // slope_i > slope_{i+1}, cross-multiplied
    Int dx1 = f.v[i + 1].first - f.v[i].first, dy1 = f.v[i + 1].second - f.v[i].second;
    Int dx2 = f.v[i + 2].first - f.v[i + 1].first, dy2 = f.v[i + 2].second - f.v[i + 1].second;
    if (dy1 * dx2 <= dy2 * dx1) return false;
  }
  return true;
}

bool all_height_one(const Poly& f) {
  for (size_t i = 0; i + 1 < f.v.size(); ++i) {
    Int h = segment_level(f.v[i], f.v[i + 1]);
    if (h != 1 && h != -1) return false;
  }
  return true;
}

std::optional<Int> pin_shift(const Poly& f) {
  if (!(f.left_x() < 0 && f.right_x() > 0))
    throw std::invalid_argument("poly1::pin_shift: origin not interior to the domain");
  // segment covering 0 fixes the shift: p*(y0 + c) - q*x0 = +1 (positivity)
  for (size_t i = 0; i + 1 < f.v.size(); ++i) {
    if (Rat(f.v[i].first) > 0 || Rat(f.v[i + 1].first) < 0) continue;
    auto [p, q] = segment_direction(f.v[i], f.v[i + 1]);
    Int h = segment_level(f.v[i], f.v[i + 1]);
    if ((1 - h) % p != 0) return std::nullopt;
    Int c = (1 - h) / p;
    for (size_t k = 0; k + 1 < f.v.size(); ++k) {
      auto [pk, qk] = segment_direction(f.v[k], f.v[k + 1]);
      Int hk = segment_level(f.v[k], f.v[k + 1]) + pk * c;
      if (hk != 1 && hk != -1) return std::nullopt;
    }
    return c;
  }
  throw std::logic_error("poly1::pin_shift: no segment covers the origin");
}

Poly shifted(const Poly& f, const Int& c) {
  Poly g = f;
  for (Pt& pt : g.v) pt.second += c;
  return g;
}

Poly sheared(const Poly& f, const Int& beta) {
  Poly g = f;
  for (Pt& pt : g.v) pt.second += beta * pt.first;
  return g;
}

Poly placed(const Poly& f, const Int& p, int sign) {
  Poly g;
  g.v.reserve(f.v.size());
  for (const Pt& pt : f.v) g.v.push_back({Int(sign) * (pt.first - p), pt.second});
  if (sign < 0) std::reverse(g.v.begin(), g.v.end());
  return g;
}

bool linear_with_integer_slope(const Poly& f) {
  if (f.v.size() != 2) return false;
  Int dx = f.v[1].first - f.v[0].first, dy = f.v[1].second - f.v[0].second;
  return dy % dx == 0;
}

std::string encode(const Poly& f) {
  std::string s;
  for (const Pt& pt : f.v) {
    s += pt.first.str();
    s += ',';
    s += pt.second.str();
    s += ';';
  }
  return s;
}

}  // namespace cdp::poly1
