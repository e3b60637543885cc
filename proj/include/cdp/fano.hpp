#pragma once

#include <variant>

#include "cdp/plfunction.hpp"

namespace cdp {

// Structured failure: which numbered condition of the Fano definition failed.
struct NotFano {
  int condition;  // 1 = origin, 2 = sum of a_i, 3 = height one / positivity, 4 = boundary sum
  std::string detail;
};

using CertificateResult = std::variant<FanoCertificate, NotFano>;

inline bool certified(const CertificateResult& r) {
  return std::holds_alternative<FanoCertificate>(r);
}

// |offset| = 1 for a primitive normal. Integral functionals that are constant
// on a codimension-one affine hull are exactly the integer multiples of the
// primitive normal form, so this single comparison decides height one.
bool facet_at_height_one(const Vec& normal, const Int& offset);

// Searches all interior lattice points as origin, in lex order; per function
// the translating integer is pinned by the graph facets and cross-checked.
// Conditions (2)-(4) are invariant under origin-preserving moves, so only the
// origin placement needs to be searched.
CertificateResult find_certificate(const CDP& c);

// Independent re-verification of all four conditions for a given certificate.
bool check_certificate(const CDP& c, const FanoCertificate& cert);

// Helper shared with canonicalization: the per-function height-one shifts at a
// given origin placement, or nothing if some condition fails there.
std::optional<std::vector<Int>> try_shifts_at(const CDP& c, const Vec& origin);

// The CDP translated so that cert.origin becomes 0, along with the translated
// functions Psi_i' = Psi_i + a_i + 1 (all at height one).
struct OriginPresentation {
  CDP cdp;
  std::vector<PLFunction> primes;
  std::vector<Int> a;
};
OriginPresentation present_at_origin(const CDP& c, const FanoCertificate& cert);

// c(box) = sum_j 4 / alpha_{e_j} for a unimodular basis; an upper bound for
// the number of functions of any normalized Fano CDP over box.
Rat c_of_box(const LatticePolytope& box, const std::vector<Vec>& basis);

// Number of functions that are non-integral or non-linear along span(v).
// Checks r <= 4/alpha_v, and when span(v) meets the boundary of a 2-d base in
// a non-lattice point also checks n <= 4/alpha_v; violations throw.
int directional_bound(const CDP& c, const FanoCertificate& cert, const Vec& v);

// Upper/lower envelope pair of a (d+1)-dimensional lattice polytope.
CDP polytope_to_cdp(const LatticePolytope& p);

// Hull of the graph of the first function and the reflected graph of the
// second; left inverse of polytope_to_cdp.
LatticePolytope cdp_to_polytope(const CDP& c);

// Direct facet-offset test around an interior lattice point, independent of
// the CDP machinery.
bool is_reflexive(const LatticePolytope& p);

// The sharp construction over the d-dimensional cross polytope: 4d functions,
// saturating c(box) = 4d.
std::pair<CDP, FanoCertificate> cross_example(int d);

}  // namespace cdp
