#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ga/linalg.hpp"
#include "ga/multivector.hpp"

namespace ga {

// Metrics whose Hadamard ratio |det G| / prod ||row|| falls below this are
// rejected as degenerate.
inline constexpr double kDegeneracyThreshold = 1e-10;

// Symmetric non-degenerate n x n matrix G_jk = G(e_j, e_k). Indices of the
// underlying Matrix are 0-based.
class MetricTensor {
public:
  // Throws invalid_metric_error (not square / not symmetric / bad dim) or
  // degenerate_metric_error.
  explicit MetricTensor(Matrix g);

  static MetricTensor euclidean(int dim);
  static MetricTensor diagonal(std::span<const double> entries);

  int dim() const { return g_.rows(); }
  const Matrix &matrix() const { return g_; }
  bool is_diagonal() const;

private:
  Matrix g_;
};

namespace detail {
struct AlgebraState;
}

// Evaluation context: dimension, metric, inverse metric and reciprocal basis
// e^k = G^{ks} e_s. Cheap to copy; immutable and safe to share across
// threads (lazy caches are initialized under std::call_once).
class Algebra {
public:
  explicit Algebra(const MetricTensor &metric);

  int dim() const;
  const MetricTensor &metric() const;
  const Matrix &inverse_metric() const;
  bool is_diagonal() const;

  // Reciprocal vector e^k, 1-based.
  const Multivector &reciprocal(int k) const;
  // e^{k1} ^ ... ^ e^{km} for the increasing indices of `blade`.
  const Multivector &reciprocal_blade(BladeIndex blade) const;

  // e_I . e_J: the Gram determinant det[G(e_i, e_j)] for i in I, j in J, and
  // zero across grades.
  double blade_product(BladeIndex a, BladeIndex b) const;

private:
  std::shared_ptr<const detail::AlgebraState> state_;
};

// Throws degenerate_metric_error / invalid_metric_error via MetricTensor.
Algebra make_algebra(const MetricTensor &metric);
inline Algebra euclidean_algebra(int dim) {
  return make_algebra(MetricTensor::euclidean(dim));
}

// sum_k <X>_k . <Y>_k with Gram-determinant blade products.
double scalar_product(const Algebra &algebra, const Multivector &x,
                      const Multivector &y);

// One entry per increasing index tuple of grade k, in canonical order.
using ComponentTable = std::vector<Multivector::Term>;

// X^{J} = X . (e^{j1} ^ ... ^ e^{jk}). Throws grade_error unless X is
// homogeneous of grade k.
ComponentTable contravariant_components(const Algebra &algebra,
                                        const Multivector &x, int k);
// X_{J} = X . (e_{j1} ^ ... ^ e_{jk}).
ComponentTable covariant_components(const Algebra &algebra,
                                    const Multivector &x, int k);

// Sum of value * e_J (or value * e^J when `reciprocal` is set).
Multivector from_components(const Algebra &algebra, const ComponentTable &table,
                            bool reciprocal);

void require_algebra_dim(const Algebra &algebra, const Multivector &x);

} // namespace ga
