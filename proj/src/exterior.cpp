#include "ga/exterior.hpp"

namespace ga {

Multivector wedge(const Multivector &x, const Multivector &y) {
  require_same_dim(x, y);
  TermAccumulator acc(x.dim());
  for (const auto &[a, xa] : x.terms())
    for (const auto &[b, yb] : y.terms()) {
      BladeIndex merged;
      const int sign = wedge_blades(a, b, merged);
      if (sign != 0)
        acc.add(merged, sign * xa * yb);
    }
  return acc.finish();
}

} // namespace ga
