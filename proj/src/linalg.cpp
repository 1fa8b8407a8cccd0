#include "ga/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ga/errors.hpp"

namespace ga {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto &r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw shape_error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
  const int n = static_cast<int>(entries.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = entries[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw shape_error("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<double> operator*(const Matrix &a, std::span<const double> v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw shape_error("matrix-vector shape mismatch");
  std::vector<double> out(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    out[i] = dot(a.row(i), v);
  return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw shape_error("matrix difference shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j) - b(i, j);
  return out;
}

double max_abs(const Matrix &a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_difference(const Matrix &a, const Matrix &b) {
  return max_abs(a - b);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

namespace {

void require_square(const Matrix &a) {
  if (!a.is_square())
    throw shape_error("square matrix required");
}

double det2(double a, double b, double c, double d) { return a * d - b * c; }

double det3(const Matrix &m, const int *r, const int *c) {
  return m(r[0], c[0]) * det2(m(r[1], c[1]), m(r[1], c[2]), m(r[2], c[1]),
                              m(r[2], c[2])) -
         m(r[0], c[1]) * det2(m(r[1], c[0]), m(r[1], c[2]), m(r[2], c[0]),
                              m(r[2], c[2])) +
         m(r[0], c[2]) * det2(m(r[1], c[0]), m(r[1], c[1]), m(r[2], c[0]),
                              m(r[2], c[1]));
}

// Determinant of the minor that drops row `skip_r` and column `skip_c`.
double minor_det(const Matrix &m, int skip_r, int skip_c) {
  const int n = m.rows() - 1;
  int r[3], c[3];
  for (int i = 0, k = 0; i <= n; ++i)
    if (i != skip_r)
      r[k++] = i;
  for (int j = 0, k = 0; j <= n; ++j)
    if (j != skip_c)
      c[k++] = j;
  switch (n) {
  case 0:
    return 1.0;
  case 1:
    return m(r[0], c[0]);
  case 2:
    return det2(m(r[0], c[0]), m(r[0], c[1]), m(r[1], c[0]), m(r[1], c[1]));
  default:
    return det3(m, r, c);
  }
}

double cofactor_det(const Matrix &m) {
  const int n = m.rows();
  if (n == 0)
    return 1.0;
  if (n == 1)
    return m(0, 0);
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    const double a = m(0, j);
    if (a == 0.0)
      continue;
    const double term = a * minor_det(m, 0, j);
    s += (j & 1) ? -term : term;
  }
  return s;
}

} // namespace

double determinant_lu(const Matrix &a) {
  require_square(a);
  const int n = a.rows();
  Matrix lu = a;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k)))
        piv = i;
    if (lu(piv, k) == 0.0)
      return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      for (int j = k + 1; j < n; ++j)
        lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

double determinant(const Matrix &a) {
  require_square(a);
  return a.rows() <= 4 ? cofactor_det(a) : determinant_lu(a);
}

Matrix inverse_lu(const Matrix &a) {
  require_square(a);
  const int n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(work(i, k)) > std::abs(work(piv, k)))
        piv = i;
    if (work(piv, k) == 0.0)
      throw degenerate_metric_error("singular matrix");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(work(k, j), work(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    const double p = work(k, k);
    for (int j = 0; j < n; ++j) {
      work(k, j) /= p;
      inv(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || work(i, k) == 0.0)
        continue;
      const double f = work(i, k);
      for (int j = 0; j < n; ++j) {
        work(i, j) -= f * work(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Matrix inverse(const Matrix &a) {
  require_square(a);
  const int n = a.rows();
  if (n > 4)
    return inverse_lu(a);
  const double det = cofactor_det(a);
  if (det == 0.0)
    throw degenerate_metric_error("singular matrix");
  Matrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = 1.0 / det;
    return inv;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double cof = minor_det(a, j, i);
      inv(i, j) = ((i + j) & 1 ? -cof : cof) / det;
    }
  return inv;
}

bool is_symmetric(const Matrix &a, double tol) {
  if (!a.is_square())
    return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol)
        return false;
  return true;
}

double hadamard_ratio(const Matrix &a) {
  require_square(a);
  double norms = 1.0;
  for (int i = 0; i < a.rows(); ++i) {
    const double r = std::sqrt(dot(a.row(i), a.row(i)));
    if (r == 0.0)
      return 0.0;
    norms *= r;
  }
  return std::abs(determinant(a)) / norms;
}

bool is_positive_definite(const Matrix &a) {
  if (!a.is_square())
    return false;
  const int n = a.rows();
  Matrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k)
      d -= l(j, k) * l(j, k);
    if (!(d > 0.0))
      return false;
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k)
        s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return true;
}

} // namespace ga
