#pragma once

#include "cdp/fano.hpp"
#include "cdp/moves.hpp"

namespace cdp {

// Total-order-comparable encoding of an equivalence class. Complete for
// one-dimensional bases; best_effort marks codes over higher-dimensional
// bases, where the symmetry sweep is restricted to base automorphisms.
struct CanonicalCode {
  std::string bytes;
  bool best_effort = false;
  auto operator<=>(const CanonicalCode& o) const { return bytes <=> o.bytes; }
  bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
};

struct NormalizeResult {
  CDP cdp;
  FanoCertificate cert;
  std::vector<Move> moves;
  bool toric;
};

// Shear/translate away every linear function of integral slope, eliminating it
// as a zero function; stops when none remain or only two functions are left.
NormalizeResult normalize(const CDP& c, const FanoCertificate& cert);

// Toric iff at most two functions survive greedy elimination, i.e. at most two
// functions are not integral-slope affine. The caveat records that the paper
// defines toric through arbitrary equivalence chains, not this procedure.
struct ToricResult {
  bool toric;
  bool caveat;
};
ToricResult is_toric(const CDP& c);

CanonicalCode canonical_code(const CDP& c, const FanoCertificate& cert);

// canonical_code equality, with certificates found internally; inputs must be
// normalized Fano CDPs.
bool equivalent(const CDP& a, const CDP& b);

}  // namespace cdp
