#pragma once

#include "ga/metric.hpp"
#include "ga/multivector.hpp"

namespace ga {

// Grade k scaled by (-1)^{k(k-1)/2}.
Multivector reversion(const Multivector &x);

inline constexpr double reversion_sign(int k) {
  return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0;
}

// Left contraction X _| Y. Each target blade coefficient is recovered from
// the adjoint relation (X _| Y) . W = Y . (~X ^ W): with b_K = Y . (~X ^ e_K)
// the result is sum_K b_K e^K over the reciprocal blades. Grade pairs p > q
// contribute nothing.
Multivector left_contract(const Algebra &algebra, const Multivector &x,
                          const Multivector &y);

// Right contraction X |_ Y from (X |_ Y) . W = X . (W ^ ~Y).
Multivector right_contract(const Algebra &algebra, const Multivector &x,
                           const Multivector &y);

} // namespace ga
