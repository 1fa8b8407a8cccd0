#include "ga/contraction.hpp"

#include "ga/exterior.hpp"

namespace ga {

namespace {

// x ^ e_K when `blade_on_right`, else e_K ^ x.
Multivector wedge_with_blade(const Multivector &x, BladeIndex k,
                             bool blade_on_right) {
  TermAccumulator acc(x.dim());
  for (const auto &[a, value] : x.terms()) {
    BladeIndex merged;
    const int sign = blade_on_right ? wedge_blades(a, k, merged)
                                    : wedge_blades(k, a, merged);
    if (sign != 0)
      acc.add(merged, sign * value);
  }
  return acc.finish(0.0);
}

// Grades m = (grade of the larger operand) - (grade of the smaller) that can
// occur.
GradeIndexSet target_grades(const Multivector &small,
                            const Multivector &large) {
  GradeIndexSet out;
  for (int p : small.grades().to_vector())
    for (int q : large.grades().to_vector())
      if (q >= p)
        out.insert(q - p);
  return out;
}

// sum over blades K of the target grades of b_K e^K, where b_K is supplied by
// `coefficient`.
template <typename Coefficient>
Multivector assemble(const Algebra &algebra, GradeIndexSet grades,
                     Coefficient coefficient) {
  TermAccumulator acc(algebra.dim());
  for (int m : grades.to_vector())
    for (BladeIndex k : blades_of_grade(algebra.dim(), m)) {
      const double b = coefficient(k);
      if (b != 0.0)
        acc.add(algebra.reciprocal_blade(k), b);
    }
  return acc.finish();
}

} // namespace

Multivector reversion(const Multivector &x) {
  std::vector<Multivector::Term> terms(x.terms().begin(), x.terms().end());
  for (auto &[blade, value] : terms)
    value *= reversion_sign(blade.grade());
  return Multivector::from_terms(x.dim(), terms);
}

Multivector left_contract(const Algebra &algebra, const Multivector &x,
                          const Multivector &y) {
  require_same_dim(x, y);
  require_algebra_dim(algebra, x);
  const Multivector rx = reversion(x);
  return assemble(algebra, target_grades(x, y), [&](BladeIndex k) {
    return scalar_product(algebra, y, wedge_with_blade(rx, k, true));
  });
}

Multivector right_contract(const Algebra &algebra, const Multivector &x,
                           const Multivector &y) {
  require_same_dim(x, y);
  require_algebra_dim(algebra, x);
  const Multivector ry = reversion(y);
  return assemble(algebra, target_grades(y, x), [&](BladeIndex k) {
    return scalar_product(algebra, x, wedge_with_blade(ry, k, false));
  });
}

} // namespace ga
