#pragma once

// Naive dense-tensor reference for the exterior algebra. Everything here is
// deliberately brute force; it exists to check the blade-level kernels.

#include <span>
#include <utility>
#include <vector>

#include "ga/multivector.hpp"

namespace ga::oracle {

inline constexpr int kMaxOracleDim = 4;

// Dense contravariant rank-k tensor over an n-dimensional space. Entry
// (i1, ..., ik) with 1-based indices is stored at the row-major offset of
// (i1 - 1, ..., ik - 1). Rank 0 holds a single scalar.
class DenseTensor {
public:
  DenseTensor(int dim, int rank);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t size() const { return entries_.size(); }

  double at(std::span<const int> indices) const;
  void set(std::span<const int> indices, double value);

  std::span<const double> entries() const { return entries_; }
  std::span<double> entries() { return entries_; }

  // Grade-1 tensor with the given coordinates.
  static DenseTensor vector(std::span<const double> coords);

private:
  std::size_t offset(std::span<const int> indices) const;

  int dim_;
  int rank_;
  std::vector<double> entries_;
};

// A dense tensor known to be fully antisymmetric. `overflow_grade()` marks
// the identically-zero results produced when the rank exceeds the dimension.
class AntisymmetricTensor {
public:
  const DenseTensor &tensor() const { return tensor_; }
  int dim() const { return tensor_.dim(); }
  int rank() const { return tensor_.rank(); }
  double at(std::span<const int> indices) const { return tensor_.at(indices); }
  bool overflow_grade() const { return overflow_; }

  // Throws invariant_error unless `t` is antisymmetric within `tol`.
  static AntisymmetricTensor checked(DenseTensor t, double tol = 1e-12);

private:
  friend AntisymmetricTensor antisymmetrize(const DenseTensor &t);
  friend AntisymmetricTensor oracle_exterior(const AntisymmetricTensor &x,
                                             const AntisymmetricTensor &y);
  AntisymmetricTensor(DenseTensor t, bool overflow)
      : tensor_(std::move(t)), overflow_(overflow) {}

  DenseTensor tensor_;
  bool overflow_ = false;
};

// Every tuple in {1..n}^k, in row-major order.
std::vector<std::vector<int>> index_tuples(int dim, int rank);

// +1 / -1 for even / odd permutations of (1, ..., k), 0 otherwise.
int perm_symbol(std::span<const int> indices);

// det[delta(upper_a, lower_b)]. Throws shape_error on length mismatch.
int gen_kronecker(std::span<const int> upper, std::span<const int> lower);

DenseTensor tensor_product(const DenseTensor &a, const DenseTensor &b);

// (1/k!) sum over permutations with sign. Throws dimension_error above
// kMaxOracleDim; rank > dim yields a flagged zero tensor.
AntisymmetricTensor antisymmetrize(const DenseTensor &t);

// ((p+q)! / (p! q!)) A(X (x) Y). The factorials are cancelled before the
// division so integer inputs stay exact.
AntisymmetricTensor oracle_exterior(const AntisymmetricTensor &x,
                                    const AntisymmetricTensor &y);

// sum of eps^{i1..ik} v_{i1} (x) ... (x) v_{ik} over all index tuples.
AntisymmetricTensor oracle_simple_kvector(
    std::span<const std::vector<double>> vectors);

// k-vector tensor -> grade-k multivector (coefficient of e_I is T^I for
// increasing I) and back. to_blades throws invariant_error on a tensor that is
// not antisymmetric within 1e-12; from_blades throws grade_error on mixed
// grades.
Multivector to_blades(const DenseTensor &t);
AntisymmetricTensor from_blades(const Multivector &x, int k);

// Component-level scalar product of two rank-k tensors under the metric
// matrix g: (1/k!) X^{i1..ik} g_{i1 j1} ... g_{ik jk} Y^{j1..jk}.
double oracle_scalar_product(const DenseTensor &x, const DenseTensor &y,
                             std::span<const double> metric_row_major);

} // namespace ga::oracle
