#pragma once

#include "ga/multivector.hpp"

namespace ga {

// e_I ^ e_J for canonical blades: zero when they share an index, otherwise
// the merged blade with the sign of the merge permutation. Returns the sign
// (0, +1, -1) and writes the merged blade.
inline int wedge_blades(BladeIndex a, BladeIndex b, BladeIndex &out) {
  if (a.mask() & b.mask())
    return 0;
  out = BladeIndex(a.mask() | b.mask());
  return (merge_inversions(a, b) & 1) ? -1 : 1;
}

// Bilinear extension of the blade rule. Throws dimension_error on mismatch.
Multivector wedge(const Multivector &x, const Multivector &y);

} // namespace ga
