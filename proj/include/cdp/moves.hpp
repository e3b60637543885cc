#pragma once

#include <variant>
#include <vector>

#include "cdp/plfunction.hpp"

namespace cdp {

// The five equivalence moves. RemoveZero removes the last function, which must
// be identically zero, so AddZero/RemoveZero invert each other exactly.
struct AddZero {
  bool operator==(const AddZero&) const = default;
};
struct RemoveZero {
  bool operator==(const RemoveZero&) const = default;
};
struct Permute {
  std::vector<size_t> perm;  // result[i] = input[perm[i]]
  bool operator==(const Permute&) const = default;
};
struct TransformBase {
  UnimodularAffineMap map;
  bool operator==(const TransformBase&) const = default;
};
struct Translate {
  std::vector<Int> alpha;  // sum = 0
  bool operator==(const Translate&) const = default;
};
struct Shear {
  Vec v;                  // dual-lattice direction
  std::vector<Int> beta;  // sum = 0
  bool operator==(const Shear&) const = default;
};

using Move = std::variant<AddZero, RemoveZero, Permute, TransformBase, Translate, Shear>;

CDP apply_move(const CDP& c, const Move& m);
Move inverse(const Move& m);

}  // namespace cdp
