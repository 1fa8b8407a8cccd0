#pragma once

#include "ga/linalg.hpp"
#include "ga/metric.hpp"
#include "ga/multivector.hpp"

namespace ga {

// Linear operator on V, stored as the matrix acting on basis coordinates
// (column j holds the image of e_j).
class LinearOperator {
public:
  explicit LinearOperator(Matrix m);

  int dim() const { return m_.rows(); }
  const Matrix &matrix() const { return m_; }

  // Image of a grade-1 multivector. Throws grade_error otherwise.
  Multivector apply(const Multivector &v) const;

private:
  Matrix m_;
};

// Exterior power: scalars fixed, e_{i1} ^ ... ^ e_{ik} mapped to
// f(e_{i1}) ^ ... ^ f(e_{ik}), extended linearly.
Multivector outermorphism(const LinearOperator &f, const Multivector &x);

// The operator g with v ._G w = g(v) ._E w, relating a metric G to a fixed
// euclidean structure G_E.
class MetricOperator {
public:
  MetricOperator(Algebra euclidean, Algebra metric, LinearOperator g);

  const Algebra &euclidean() const { return euclidean_; }
  const Algebra &metric() const { return metric_; }
  const LinearOperator &map() const { return g_; }
  const Matrix &matrix() const { return g_.matrix(); }
  int dim() const { return g_.dim(); }

  Multivector apply(const Multivector &v) const { return g_.apply(v); }

private:
  Algebra euclidean_;
  Algebra metric_;
  LinearOperator g_;
};

// g(v) = (v ._G e_k) e^k, with e^k reciprocal to e_k under G_E. Throws
// dimension_error on mismatch and invalid_euclidean_error unless G_E is
// positive definite.
MetricOperator make_metric_operator(const Algebra &euclidean,
                                    const Algebra &metric);
inline MetricOperator make_metric_operator(const Algebra &metric) {
  return make_metric_operator(euclidean_algebra(metric.dim()), metric);
}

// g^{-1}(v) = G^{jk} (v ._E e_j) e_k.
LinearOperator inverse_operator(const MetricOperator &m);

Multivector outermorphism(const MetricOperator &m, const Multivector &x);

// X ._G Y computed as g(X) ._E Y.
double deformed_scalar_product(const MetricOperator &m, const Multivector &x,
                               const Multivector &y);

struct DeformedContractions {
  Multivector left;  // g(X) _|_E Y
  Multivector right; // X |_E g(Y)
};

DeformedContractions deformed_contractions(const MetricOperator &m,
                                           const Multivector &x,
                                           const Multivector &y);

} // namespace ga
