#include "cdp/lattice.hpp"

#include <stdexcept>

namespace cdp {

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec negate(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const Vec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

RatVec to_rat(const Vec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

bool is_integral(const RatVec& a) {
  for (const Rat& x : a)
    if (!is_integer(x)) return false;
  return true;
}

Vec to_int(const RatVec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!is_integer(a[i])) throw std::invalid_argument("to_int: non-integral coordinate");
    r[i] = numerator(a[i]);
  }
  return r;
}

Int gcd_of(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

Vec primitive(const Vec& v) {
  Int g = gcd_of(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

Int determinant(const std::vector<Vec>& rows) {
  size_t n = rows.size();
  for (const Vec& r : rows)
    if (r.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  std::vector<Vec> a = rows;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

UnimodularAffineMap::UnimodularAffineMap(std::vector<Vec> m, Vec t)
    : matrix(std::move(m)), translation(std::move(t)) {
  if (matrix.size() != translation.size())
    throw std::invalid_argument("UnimodularAffineMap: dimension mismatch");
  Int d = determinant(matrix);
  if (d != 1 && d != -1)
    throw std::invalid_argument("UnimodularAffineMap: determinant must be +-1, got " + d.str());
}

UnimodularAffineMap UnimodularAffineMap::identity(int d) {
  std::vector<Vec> m(d, Vec(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return UnimodularAffineMap(std::move(m), Vec(d, 0));
}

UnimodularAffineMap UnimodularAffineMap::translation_by(const Vec& t) {
  auto id = identity(static_cast<int>(t.size()));
  id.translation = t;
  return id;
}

UnimodularAffineMap UnimodularAffineMap::linear(std::vector<Vec> m) {
  Vec t(m.size(), 0);
  return UnimodularAffineMap(std::move(m), std::move(t));
}

Vec UnimodularAffineMap::apply(const Vec& x) const {
  Vec r = translation;
  for (size_t i = 0; i < matrix.size(); ++i) r[i] += dot(matrix[i], x);
  return r;
}

RatVec UnimodularAffineMap::apply(const RatVec& x) const {
  RatVec r(matrix.size());
  for (size_t i = 0; i < matrix.size(); ++i) r[i] = dot(x, matrix[i]) + Rat(translation[i]);
  return r;
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
  // adjugate / det; |det| = 1 keeps entries integral
  size_t n = matrix.size();
  Int d = determinant(matrix);
  std::vector<Vec> inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::vector<Vec> minor;
      minor.reserve(n - 1);
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        Vec row;
        row.reserve(n - 1);
        for (size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(matrix[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * d;  // d = 1/d since d = +-1
    }
  }
  UnimodularAffineMap result = linear(std::move(inv));
  result.translation = negate(result.apply(translation));
  // restore: inverse(x) = M^-1 x - M^-1 t
  return result;
}

UnimodularAffineMap UnimodularAffineMap::after(const UnimodularAffineMap& g) const {
  size_t n = matrix.size();
  std::vector<Vec> m(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) m[i][j] += matrix[i][k] * g.matrix[k][j];
  Vec t = apply(g.translation);
  return UnimodularAffineMap(std::move(m), std::move(t));
}

}  // namespace cdp
