#include "ga/deformation.hpp"

#include <string>

#include "ga/contraction.hpp"
#include "ga/errors.hpp"
#include "ga/exterior.hpp"

namespace ga {

LinearOperator::LinearOperator(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() < 1 || m_.rows() > kMaxDim)
    throw shape_error("linear operator needs a square matrix of size 1.." +
                      std::to_string(kMaxDim));
}

Multivector LinearOperator::apply(const Multivector &v) const {
  if (v.dim() != dim())
    throw dimension_error("operator dimension mismatch");
  if (!v.is_homogeneous(1))
    throw grade_error("linear operator applies to vectors only");
  const auto coords = v.vector_part();
  return Multivector::vector(dim(), m_ * std::span<const double>(coords));
}

Multivector outermorphism(const LinearOperator &f, const Multivector &x) {
  if (x.dim() != f.dim())
    throw dimension_error("operator dimension mismatch");
  const int n = f.dim();
  std::vector<Multivector> images;
  for (int j = 0; j < n; ++j) {
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i)
      col[i] = f.matrix()(i, j);
    images.push_back(Multivector::vector(n, col));
  }
  TermAccumulator acc(n);
  for (const auto &[blade, value] : x.terms()) {
    Multivector image = Multivector::scalar(n, 1.0);
    for (int i : blade.indices())
      image = wedge(image, images[i - 1]);
    acc.add(image, value);
  }
  return acc.finish();
}

MetricOperator::MetricOperator(Algebra euclidean, Algebra metric,
                               LinearOperator g)
    : euclidean_(std::move(euclidean)), metric_(std::move(metric)),
      g_(std::move(g)) {}

MetricOperator make_metric_operator(const Algebra &euclidean,
                                    const Algebra &metric) {
  const int n = metric.dim();
  if (euclidean.dim() != n)
    throw dimension_error("euclidean structure has dimension " +
                          std::to_string(euclidean.dim()) + ", metric has " +
                          std::to_string(n));
  if (!is_positive_definite(euclidean.metric().matrix()))
    throw invalid_euclidean_error(
        "euclidean structure must be positive definite");
  const Matrix &g = metric.metric().matrix();
  // Column j: g(e_j) = sum_k (e_j ._G e_k) e^k_E.
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const auto recip = euclidean.reciprocal(k + 1).vector_part();
      for (int s = 0; s < n; ++s)
        m(s, j) += g(j, k) * recip[s];
    }
  return MetricOperator(euclidean, metric, LinearOperator(std::move(m)));
}

LinearOperator inverse_operator(const MetricOperator &m) {
  const int n = m.dim();
  const Matrix &g_inv = m.metric().inverse_metric();
  const Matrix &ge = m.euclidean().metric().matrix();
  // Column i: g^{-1}(e_i) = G^{jk} (e_i ._E e_j) e_k.
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double proj = ge(i, j);
      if (proj == 0.0)
        continue;
      for (int k = 0; k < n; ++k)
        out(k, i) += g_inv(j, k) * proj;
    }
  return LinearOperator(std::move(out));
}

Multivector outermorphism(const MetricOperator &m, const Multivector &x) {
  return outermorphism(m.map(), x);
}

double deformed_scalar_product(const MetricOperator &m, const Multivector &x,
                               const Multivector &y) {
  require_same_dim(x, y);
  return scalar_product(m.euclidean(), outermorphism(m, x), y);
}

DeformedContractions deformed_contractions(const MetricOperator &m,
                                           const Multivector &x,
                                           const Multivector &y) {
  require_same_dim(x, y);
  return {left_contract(m.euclidean(), outermorphism(m, x), y),
          right_contract(m.euclidean(), x, outermorphism(m, y))};
}

} // namespace ga
