#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace ga {

// Row-major dense real matrix. Sized for metric work (n <= 12).
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);
  static Matrix diagonal(std::span<const double> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double &operator()(int r, int c) { return data_[r * cols_ + c]; }
  double operator()(int r, int c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(int r) const {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }

  Matrix transposed() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix &a, const Matrix &b);
std::vector<double> operator*(const Matrix &a, std::span<const double> v);
Matrix operator-(const Matrix &a, const Matrix &b);

double max_abs(const Matrix &a);
double max_abs_difference(const Matrix &a, const Matrix &b);

// Cofactor expansion up to 4x4, LU with partial pivoting beyond.
double determinant(const Matrix &a);
double determinant_lu(const Matrix &a);

// Adjugate over determinant up to 4x4, Gauss-Jordan with partial pivoting
// beyond. Throws degenerate_metric_error on an exactly singular pivot.
Matrix inverse(const Matrix &a);
Matrix inverse_lu(const Matrix &a);

bool is_symmetric(const Matrix &a, double tol);

// |det| / prod(row norms), in [0, 1]; 0 for singular input.
double hadamard_ratio(const Matrix &a);

// True when the Cholesky factorization succeeds with positive pivots.
bool is_positive_definite(const Matrix &a);

double dot(std::span<const double> a, std::span<const double> b);

} // namespace ga
