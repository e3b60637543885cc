#pragma once

#include <vector>

#include "cdp/numbers.hpp"

namespace cdp {

// A lattice vector in M = Z^d (or in the dual lattice M*).
using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int dot(const Vec& a, const Vec& b);
Rat dot(const RatVec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(const Vec& a);
Vec scale(const Int& c, const Vec& a);
bool is_zero(const Vec& a);
bool lex_less(const Vec& a, const Vec& b);
RatVec to_rat(const Vec& a);
bool is_integral(const RatVec& a);
Vec to_int(const RatVec& a);  // requires is_integral

// v / gcd(entries); rejects the zero vector
Vec primitive(const Vec& v);

Int gcd_of(const Vec& v);

// Exact determinant (Bareiss fraction-free elimination), square matrices as row vectors.
Int determinant(const std::vector<Vec>& rows);

// x -> matrix * x + translation with |det(matrix)| = 1, so invertible over Z.
struct UnimodularAffineMap {
  std::vector<Vec> matrix;  // rows
  Vec translation;

  UnimodularAffineMap(std::vector<Vec> m, Vec t);
  static UnimodularAffineMap identity(int d);
  static UnimodularAffineMap translation_by(const Vec& t);
  static UnimodularAffineMap linear(std::vector<Vec> m);

  int dim() const { return static_cast<int>(translation.size()); }
  Vec apply(const Vec& x) const;
  RatVec apply(const RatVec& x) const;
  UnimodularAffineMap inverse() const;
  // composition: (this after g)(x) = this(g(x))
  UnimodularAffineMap after(const UnimodularAffineMap& g) const;
  bool operator==(const UnimodularAffineMap& o) const = default;
};

}  // namespace cdp
