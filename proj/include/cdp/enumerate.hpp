#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "cdp/canonical.hpp"

namespace cdp {

struct EnumerationOptions {
  std::uint64_t max_nodes = 10'000'000;
  // structural pruning from the two-dimensional classification (endpoint sign
  // restriction and the shape restrictions over long bases); off by default so
  // the plain search relies only on the fixed-base finiteness bounds
  bool structural_pruning = false;
};

// Search budget exhausted; carries the frontier of the partial search.
struct PartialResultError : std::runtime_error {
  PartialResultError(std::uint64_t nodes, std::string frontier_state)
      : std::runtime_error("enumeration exceeded the node budget after " +
                           std::to_string(nodes) + " nodes"),
        nodes(nodes),
        frontier(std::move(frontier_state)) {}
  std::uint64_t nodes;
  std::string frontier;
};

struct EnumeratedClass {
  CDP cdp;
  FanoCertificate cert;
  CanonicalCode code;
};

// All equivalence classes of normalized (hence, for n >= 3, non-toric) Fano
// CDPs with the given base and number of functions, one representative per
// canonical code, sorted by code. n = 1, 2 admit only toric classes and give
// an empty result.
std::vector<EnumeratedClass> enumerate_fixed_base(const LatticePolytope& box, int n,
                                                  const EnumerationOptions& opts = {});

struct ClassificationResult {
  std::vector<EnumeratedClass> classes;
  std::map<std::pair<int, int>, int> breakdown;  // (m, n) -> class count
};

// The two-dimensional classification: bases [-1, m-1] for m in {2,3,4,6},
// n <= 4 for m = 2 and n = 3 otherwise; 34 classes. Any count mismatch throws.
ClassificationResult classify_2d(int threads = 1);

// Endpoint-value Diophantine branches over [-1, m-1]. The worked branch
// (both of the first two endpoint values of line type, third value -m+2)
// reduces to (m-2) | 4 and yields {(4,2,4),(6,2,3)}; the other branches are
// searched exhaustively below the cap. All admissible solutions have
// m in {3, 4, 6}.
struct BranchSolutions {
  std::set<std::array<Int, 3>> worked_branch;      // (m, lambda1, lambda2), lambda1 <= lambda2
  std::set<std::array<Int, 3>> worked_branch_raw;  // without the lambda_min = 2 reduction
  std::set<Int> m_values;                          // union over all branches
};
BranchSolutions solve_branch_equation(int m_cap = 50);

}  // namespace cdp
