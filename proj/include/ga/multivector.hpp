#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ga/blade.hpp"

namespace ga {

// Absolute threshold below which accumulated coefficients are dropped.
inline constexpr double kPruneEpsilon = 1e-12;

// Subset of {0, ..., n}.
class GradeIndexSet {
public:
  constexpr GradeIndexSet() = default;

  constexpr void insert(int k) { bits_ |= 1u << k; }
  constexpr bool contains(int k) const { return (bits_ >> k) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  std::vector<int> to_vector() const;

  friend constexpr bool operator==(GradeIndexSet, GradeIndexSet) = default;

private:
  std::uint32_t bits_ = 0;
};

// Sparse multivector over an n-dimensional space: canonical blades mapped to
// nonzero real coefficients, kept sorted by (grade, lexicographic blade).
class Multivector {
public:
  using Term = std::pair<BladeIndex, double>;

  // Throws dimension_error unless 1 <= dim <= kMaxDim.
  explicit Multivector(int dim);

  // Duplicate blades are summed; exact zeros are dropped.
  static Multivector from_terms(int dim, std::span<const Term> terms);
  static Multivector from_terms(int dim, std::initializer_list<Term> terms) {
    return from_terms(dim, std::span<const Term>(terms.begin(), terms.size()));
  }
  static Multivector scalar(int dim, double value);
  // Grade-1 multivector with the given coordinates (length must equal dim).
  static Multivector vector(int dim, std::span<const double> coords);

  int dim() const { return dim_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(BladeIndex blade) const;
  double scalar_part() const { return coefficient(BladeIndex::scalar()); }
  // Coordinates of the grade-1 part.
  std::vector<double> vector_part() const;

  GradeIndexSet grades() const;
  // True when every term has grade k (the zero multivector qualifies).
  bool is_homogeneous(int k) const;

  // Copy with |coeff| <= eps dropped.
  Multivector pruned(double eps) const;

  friend bool operator==(const Multivector &, const Multivector &) = default;

private:
  friend class TermAccumulator;

  int dim_;
  std::vector<Term> terms_;
};

// Dense scratch space for building a multivector from many contributions.
class TermAccumulator {
public:
  explicit TermAccumulator(int dim);

  void add(BladeIndex blade, double value);
  void add(const Multivector &x, double factor = 1.0);
  Multivector finish(double eps = kPruneEpsilon);

private:
  int dim_;
  std::vector<double> dense_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint32_t> touched_;
};

Multivector zero(int dim);
// Throws grade_error unless 0 <= k <= dim(x).
Multivector grade_part(const Multivector &x, int k);
Multivector add(const Multivector &x, const Multivector &y);
Multivector subtract(const Multivector &x, const Multivector &y);
Multivector scale(double a, const Multivector &x);
Multivector negate(const Multivector &x);

// +/- the canonical blade named by `indices` (any order, 1-based). The sign is
// the parity of the sorting permutation.
Multivector basis_blade(int dim, std::span<const int> indices);
inline Multivector basis_blade(int dim, std::initializer_list<int> indices) {
  return basis_blade(dim, std::span<const int>(indices.begin(), indices.size()));
}

// 2^dim, for 0 <= dim <= kMaxDim.
std::uint64_t blade_count(int dim);
// binomial(dim, k).
std::uint64_t blade_count(int dim, int k);
// Canonical blades of grade k in increasing order.
std::vector<BladeIndex> blades_of_grade(int dim, int k);
// All 2^dim canonical blades in increasing order.
std::vector<BladeIndex> all_blades(int dim);

// Max |x_I - y_I| over all blades.
double max_abs_difference(const Multivector &x, const Multivector &y);
double max_abs_coefficient(const Multivector &x);

void require_same_dim(const Multivector &x, const Multivector &y);

inline Multivector operator+(const Multivector &x, const Multivector &y) {
  return add(x, y);
}
inline Multivector operator-(const Multivector &x, const Multivector &y) {
  return subtract(x, y);
}
inline Multivector operator-(const Multivector &x) { return negate(x); }
inline Multivector operator*(double a, const Multivector &x) {
  return scale(a, x);
}

} // namespace ga
