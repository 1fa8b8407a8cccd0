#pragma once

#include <vector>

#include "ga/metric.hpp"
#include "ga/multivector.hpp"

namespace ga {

// v X = v _| X + v ^ X for a vector v.
Multivector vector_product(const Algebra &algebra, const Multivector &v,
                           const Multivector &x);

// Clifford product. Blades of X are peeled from the left: with
// e_I = e_i ^ e_R (i the lowest index),
//   e_I Y = e_i (e_R Y) - (e_i _| e_R) Y,
// and the vector factor is applied through vector_product. The correction
// term vanishes when e_i is orthogonal to the factors of e_R.
Multivector geometric_product(const Algebra &algebra, const Multivector &x,
                              const Multivector &y);

// Memoized products of basis blades: at(I, J) = e_I e_J.
class CayleyTable {
public:
  // `entries` holds 4^dim products indexed by (I.mask() << dim) | J.mask().
  CayleyTable(int dim, std::vector<Multivector> entries);

  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const Multivector &at(BladeIndex a, BladeIndex b) const {
    return entries_[(static_cast<std::size_t>(a.mask()) << dim_) | b.mask()];
  }

  friend bool operator==(const CayleyTable &, const CayleyTable &) = default;

private:
  int dim_;
  std::vector<Multivector> entries_;
};

// Built in parallel; see kernels.hpp for the serial reference.
CayleyTable cayley_table(const Algebra &algebra);

Multivector geometric_product(const CayleyTable &table, const Multivector &x,
                              const Multivector &y);

} // namespace ga
