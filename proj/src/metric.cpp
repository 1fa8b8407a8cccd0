#include "ga/metric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "ga/errors.hpp"
#include "ga/exterior.hpp"

namespace ga {

namespace detail {

struct AlgebraState {
  explicit AlgebraState(const MetricTensor &m)
      : metric(m), inverse(inverse_of(m)), diagonal(m.is_diagonal()),
        grade_once(static_cast<std::size_t>(m.dim()) + 1),
        reciprocal_blades(static_cast<std::size_t>(blade_count(m.dim())),
                          Multivector(m.dim())) {
    const int n = m.dim();
    for (int k = 0; k < n; ++k)
      reciprocal_vectors.push_back(Multivector::vector(n, inverse.row(k)));
  }

  static Matrix inverse_of(const MetricTensor &m) {
    try {
      return ga::inverse(m.matrix());
    } catch (const degenerate_metric_error &) {
      throw degenerate_metric_error("metric matrix is singular");
    }
  }

  void ensure_grade(int k) const {
    std::call_once(grade_once[k], [this, k] {
      const int n = metric.dim();
      for (BladeIndex blade : blades_of_grade(n, k)) {
        Multivector &slot = reciprocal_blades[blade.mask()];
        if (k == 0) {
          slot = Multivector::scalar(n, 1.0);
          continue;
        }
        const int last = blade.max_index();
        const BladeIndex rest(blade.mask() & ~(1u << (last - 1)));
        ensure_grade(k - 1);
        slot = wedge(reciprocal_blades[rest.mask()],
                     reciprocal_vectors[last - 1]);
      }
    });
  }

  MetricTensor metric;
  Matrix inverse;
  bool diagonal;
  std::vector<Multivector> reciprocal_vectors;
  mutable std::vector<std::once_flag> grade_once;
  mutable std::vector<Multivector> reciprocal_blades;
};

} // namespace detail

MetricTensor::MetricTensor(Matrix g) : g_(std::move(g)) {
  if (!g_.is_square())
    throw invalid_metric_error("metric matrix must be square");
  if (g_.rows() < 1 || g_.rows() > kMaxDim)
    throw invalid_metric_error("metric dimension " + std::to_string(g_.rows()) +
                               " outside 1.." + std::to_string(kMaxDim));
  for (int i = 0; i < g_.rows(); ++i)
    for (int j = 0; j < g_.cols(); ++j)
      if (!std::isfinite(g_(i, j)))
        throw invalid_metric_error("metric entries must be finite");
  const double tol = 1e-12 * std::max(1.0, max_abs(g_));
  if (!is_symmetric(g_, tol))
    throw invalid_metric_error("metric matrix is not symmetric");
  for (int i = 0; i < g_.rows(); ++i)
    for (int j = i + 1; j < g_.cols(); ++j)
      g_(i, j) = g_(j, i) = 0.5 * (g_(i, j) + g_(j, i));
  if (hadamard_ratio(g_) < kDegeneracyThreshold)
    throw degenerate_metric_error("metric matrix is degenerate");
}

MetricTensor MetricTensor::euclidean(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw dimension_error("dimension " + std::to_string(dim) + " outside 1.." +
                          std::to_string(kMaxDim));
  return MetricTensor(Matrix::identity(dim));
}

MetricTensor MetricTensor::diagonal(std::span<const double> entries) {
  return MetricTensor(Matrix::diagonal(entries));
}

bool MetricTensor::is_diagonal() const {
  for (int i = 0; i < g_.rows(); ++i)
    for (int j = 0; j < g_.cols(); ++j)
      if (i != j && g_(i, j) != 0.0)
        return false;
  return true;
}

Algebra::Algebra(const MetricTensor &metric)
    : state_(std::make_shared<const detail::AlgebraState>(metric)) {}

int Algebra::dim() const { return state_->metric.dim(); }
const MetricTensor &Algebra::metric() const { return state_->metric; }
const Matrix &Algebra::inverse_metric() const { return state_->inverse; }
bool Algebra::is_diagonal() const { return state_->diagonal; }

const Multivector &Algebra::reciprocal(int k) const {
  if (k < 1 || k > dim())
    throw dimension_error("reciprocal index " + std::to_string(k) +
                          " outside 1.." + std::to_string(dim()));
  return state_->reciprocal_vectors[k - 1];
}

const Multivector &Algebra::reciprocal_blade(BladeIndex blade) const {
  if (!blade.fits(dim()))
    throw dimension_error("blade exceeds algebra dimension");
  state_->ensure_grade(blade.grade());
  return state_->reciprocal_blades[blade.mask()];
}

double Algebra::blade_product(BladeIndex a, BladeIndex b) const {
  const int k = a.grade();
  if (k != b.grade())
    return 0.0;
  if (k == 0)
    return 1.0;
  const Matrix &g = state_->metric.matrix();
  if (state_->diagonal) {
    if (a != b)
      return 0.0;
    double p = 1.0;
    for (std::uint32_t m = a.mask(); m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      p *= g(i, i);
    }
    return p;
  }
  const auto ia = a.indices();
  const auto ib = b.indices();
  Matrix gram(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      gram(r, c) = g(ia[r] - 1, ib[c] - 1);
  return determinant(gram);
}

Algebra make_algebra(const MetricTensor &metric) { return Algebra(metric); }

void require_algebra_dim(const Algebra &algebra, const Multivector &x) {
  if (x.dim() != algebra.dim())
    throw dimension_error("multivector dimension " + std::to_string(x.dim()) +
                          " does not match algebra dimension " +
                          std::to_string(algebra.dim()));
}

double scalar_product(const Algebra &algebra, const Multivector &x,
                      const Multivector &y) {
  require_same_dim(x, y);
  require_algebra_dim(algebra, x);
  const auto yt = y.terms();
  double s = 0.0;
  for (const auto &[a, xa] : x.terms()) {
    const int k = a.grade();
    if (algebra.is_diagonal()) {
      const double yb = y.coefficient(a);
      if (yb != 0.0)
        s += xa * yb * algebra.blade_product(a, a);
      continue;
    }
    // Terms are sorted by grade; scan the grade-k block of y.
    auto lo = std::partition_point(yt.begin(), yt.end(), [k](const auto &t) {
      return t.first.grade() < k;
    });
    for (auto it = lo; it != yt.end() && it->first.grade() == k; ++it)
      s += xa * it->second * algebra.blade_product(a, it->first);
  }
  return s;
}

namespace {

void require_grade(const Multivector &x, int k) {
  if (k < 0 || k > x.dim())
    throw grade_error("grade " + std::to_string(k) + " outside 0.." +
                      std::to_string(x.dim()));
  if (!x.is_homogeneous(k))
    throw grade_error("expected a pure grade-" + std::to_string(k) +
                      " multivector");
}

} // namespace

ComponentTable contravariant_components(const Algebra &algebra,
                                        const Multivector &x, int k) {
  require_algebra_dim(algebra, x);
  require_grade(x, k);
  ComponentTable out;
  for (BladeIndex blade : blades_of_grade(x.dim(), k))
    out.emplace_back(blade,
                     scalar_product(algebra, x, algebra.reciprocal_blade(blade)));
  return out;
}

ComponentTable covariant_components(const Algebra &algebra,
                                    const Multivector &x, int k) {
  require_algebra_dim(algebra, x);
  require_grade(x, k);
  ComponentTable out;
  for (BladeIndex blade : blades_of_grade(x.dim(), k))
    out.emplace_back(blade, scalar_product(
                                algebra, x,
                                Multivector::from_terms(x.dim(), {{blade, 1.0}})));
  return out;
}

Multivector from_components(const Algebra &algebra, const ComponentTable &table,
                            bool reciprocal) {
  TermAccumulator acc(algebra.dim());
  for (const auto &[blade, value] : table) {
    if (reciprocal)
      acc.add(algebra.reciprocal_blade(blade), value);
    else
      acc.add(blade, value);
  }
  return acc.finish();
}

} // namespace ga
