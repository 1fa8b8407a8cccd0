#include "ga/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ga/errors.hpp"

namespace ga {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw dimension_error("dimension " + std::to_string(dim) +
                          " outside 1.." + std::to_string(kMaxDim));
}

bool term_less(const Multivector::Term &a, const Multivector::Term &b) {
  return a.first < b.first;
}

} // namespace

std::vector<int> GradeIndexSet::to_vector() const {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k)
    if (contains(k))
      out.push_back(k);
  return out;
}

Multivector::Multivector(int dim) : dim_(dim) { check_dim(dim); }

Multivector Multivector::from_terms(int dim, std::span<const Term> terms) {
  TermAccumulator acc(dim);
  for (const auto &[blade, value] : terms) {
    if (!blade.fits(dim))
      throw dimension_error("blade index " + std::to_string(blade.max_index()) +
                            " exceeds dimension " + std::to_string(dim));
    acc.add(blade, value);
  }
  return acc.finish(0.0);
}

Multivector Multivector::scalar(int dim, double value) {
  return from_terms(dim, {{BladeIndex::scalar(), value}});
}

Multivector Multivector::vector(int dim, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != dim)
    throw dimension_error("vector has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(dim));
  TermAccumulator acc(dim);
  for (int i = 0; i < dim; ++i)
    acc.add(BladeIndex::vector(i + 1), coords[i]);
  return acc.finish(0.0);
}

double Multivector::coefficient(BladeIndex blade) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{blade, 0.0},
                             term_less);
  return (it != terms_.end() && it->first == blade) ? it->second : 0.0;
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> out(dim_, 0.0);
  for (const auto &[blade, value] : terms_)
    if (blade.grade() == 1)
      out[blade.max_index() - 1] = value;
  return out;
}

GradeIndexSet Multivector::grades() const {
  GradeIndexSet out;
  for (const auto &term : terms_)
    out.insert(term.first.grade());
  return out;
}

bool Multivector::is_homogeneous(int k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const Term &t) { return t.first.grade() == k; });
}

Multivector Multivector::pruned(double eps) const {
  Multivector out(dim_);
  for (const auto &term : terms_)
    if (std::abs(term.second) > eps)
      out.terms_.push_back(term);
  return out;
}

TermAccumulator::TermAccumulator(int dim)
    : dim_(dim), dense_(std::size_t{1} << dim, 0.0),
      seen_(std::size_t{1} << dim, 0) {
  check_dim(dim);
}

void TermAccumulator::add(BladeIndex blade, double value) {
  const std::uint32_t m = blade.mask();
  if (!seen_[m]) {
    seen_[m] = 1;
    touched_.push_back(m);
  }
  dense_[m] += value;
}

void TermAccumulator::add(const Multivector &x, double factor) {
  if (x.dim() != dim_)
    throw dimension_error("dimension mismatch: " + std::to_string(x.dim()) +
                          " vs " + std::to_string(dim_));
  for (const auto &[blade, value] : x.terms())
    add(blade, factor * value);
}

Multivector TermAccumulator::finish(double eps) {
  std::sort(touched_.begin(), touched_.end(),
            [](std::uint32_t a, std::uint32_t b) {
              return BladeIndex(a) < BladeIndex(b);
            });
  std::vector<Multivector::Term> terms;
  terms.reserve(touched_.size());
  for (std::uint32_t m : touched_) {
    const double v = dense_[m];
    if (v != 0.0 && std::abs(v) > eps)
      terms.emplace_back(BladeIndex(m), v);
    dense_[m] = 0.0;
    seen_[m] = 0;
  }
  touched_.clear();
  Multivector out(dim_);
  out.terms_ = std::move(terms);
  return out;
}

Multivector zero(int dim) { return Multivector(dim); }

Multivector grade_part(const Multivector &x, int k) {
  if (k < 0 || k > x.dim())
    throw grade_error("grade " + std::to_string(k) + " outside 0.." +
                      std::to_string(x.dim()));
  std::vector<Multivector::Term> terms;
  for (const auto &term : x.terms())
    if (term.first.grade() == k)
      terms.push_back(term);
  return Multivector::from_terms(x.dim(), terms);
}

void require_same_dim(const Multivector &x, const Multivector &y) {
  if (x.dim() != y.dim())
    throw dimension_error("dimension mismatch: " + std::to_string(x.dim()) +
                          " vs " + std::to_string(y.dim()));
}

Multivector add(const Multivector &x, const Multivector &y) {
  require_same_dim(x, y);
  TermAccumulator acc(x.dim());
  acc.add(x);
  acc.add(y);
  return acc.finish();
}

Multivector subtract(const Multivector &x, const Multivector &y) {
  require_same_dim(x, y);
  TermAccumulator acc(x.dim());
  acc.add(x);
  acc.add(y, -1.0);
  return acc.finish();
}

Multivector scale(double a, const Multivector &x) {
  TermAccumulator acc(x.dim());
  acc.add(x, a);
  return acc.finish();
}

Multivector negate(const Multivector &x) { return scale(-1.0, x); }

Multivector basis_blade(int dim, std::span<const int> indices) {
  check_dim(dim);
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > dim)
      throw dimension_error("basis index " + std::to_string(i) +
                            " outside 1.." + std::to_string(dim));
    if (mask & (1u << (i - 1)))
      throw degenerate_blade_error("repeated basis index " + std::to_string(i));
    mask |= 1u << (i - 1);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (indices[a] > indices[b])
        ++inversions;
  return Multivector::from_terms(dim,
                                 {{BladeIndex(mask), parity_sign(inversions)}});
}

std::uint64_t blade_count(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw dimension_error("dimension " + std::to_string(dim) + " outside 0.." +
                          std::to_string(kMaxDim));
  return std::uint64_t{1} << dim;
}

std::uint64_t blade_count(int dim, int k) {
  blade_count(dim);
  if (k < 0 || k > dim)
    return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i)
    c = c * static_cast<std::uint64_t>(dim - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::vector<BladeIndex> blades_of_grade(int dim, int k) {
  std::vector<BladeIndex> out;
  if (k < 0 || k > dim)
    return out;
  const std::uint32_t total = static_cast<std::uint32_t>(blade_count(dim));
  for (std::uint32_t m = 0; m < total; ++m)
    if (std::popcount(m) == k)
      out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BladeIndex> all_blades(int dim) {
  std::vector<BladeIndex> out;
  const std::uint32_t total = static_cast<std::uint32_t>(blade_count(dim));
  out.reserve(total);
  for (std::uint32_t m = 0; m < total; ++m)
    out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

double max_abs_difference(const Multivector &x, const Multivector &y) {
  require_same_dim(x, y);
  TermAccumulator acc(x.dim());
  acc.add(x);
  acc.add(y, -1.0);
  return max_abs_coefficient(acc.finish(0.0));
}

double max_abs_coefficient(const Multivector &x) {
  double m = 0.0;
  for (const auto &term : x.terms())
    m = std::max(m, std::abs(term.second));
  return m;
}

} // namespace ga
