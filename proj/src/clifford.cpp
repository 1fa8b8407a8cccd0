#include "ga/clifford.hpp"

#include <bit>
#include <string>

#include "ga/contraction.hpp"
#include "ga/errors.hpp"
#include "ga/exterior.hpp"
#include "ga/kernels.hpp"

namespace ga {

namespace {

Multivector blade_times(const Algebra &algebra, BladeIndex blade,
                        const Multivector &y) {
  if (blade.mask() == 0)
    return y;
  const int n = algebra.dim();
  const std::uint32_t low = blade.mask() & (~blade.mask() + 1);
  const BladeIndex rest(blade.mask() & ~low);
  const Multivector v = Multivector::from_terms(n, {{BladeIndex(low), 1.0}});
  Multivector out = vector_product(algebra, v, blade_times(algebra, rest, y));
  const Multivector correction = left_contract(
      algebra, v, Multivector::from_terms(n, {{rest, 1.0}}));
  if (!correction.is_zero())
    out = out - geometric_product(algebra, correction, y);
  return out;
}

} // namespace

Multivector vector_product(const Algebra &algebra, const Multivector &v,
                           const Multivector &x) {
  if (!v.is_homogeneous(1))
    throw grade_error("vector_product expects a grade-1 left factor");
  return left_contract(algebra, v, x) + wedge(v, x);
}

Multivector geometric_product(const Algebra &algebra, const Multivector &x,
                              const Multivector &y) {
  require_same_dim(x, y);
  require_algebra_dim(algebra, x);
  TermAccumulator acc(x.dim());
  for (const auto &[blade, value] : x.terms())
    acc.add(blade_times(algebra, blade, y), value);
  return acc.finish();
}

CayleyTable::CayleyTable(int dim, std::vector<Multivector> entries)
    : dim_(dim), entries_(std::move(entries)) {
  const std::size_t side = static_cast<std::size_t>(blade_count(dim));
  if (entries_.size() != side * side)
    throw shape_error("Cayley table for dimension " + std::to_string(dim) +
                      " needs " + std::to_string(side * side) + " entries");
}

CayleyTable cayley_table(const Algebra &algebra) {
  return kernels::build_cayley_table(algebra);
}

Multivector geometric_product(const CayleyTable &table, const Multivector &x,
                              const Multivector &y) {
  require_same_dim(x, y);
  if (x.dim() != table.dim())
    throw dimension_error("Cayley table dimension mismatch");
  TermAccumulator acc(x.dim());
  for (const auto &[a, xa] : x.terms())
    for (const auto &[b, yb] : y.terms())
      acc.add(table.at(a, b), xa * yb);
  return acc.finish();
}

} // namespace ga
