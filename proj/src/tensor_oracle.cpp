#include "ga/tensor_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ga/errors.hpp"

namespace ga::oracle {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

// Sign of the permutation taking (0..k-1) to `perm`.
int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b])
        ++inversions;
  return (inversions & 1) ? -1 : 1;
}

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Signed sum over permutations of t evaluated at permuted index slots.
double signed_permutation_sum(const DenseTensor &t, std::span<const int> idx,
                              const std::vector<std::vector<int>> &perms) {
  std::vector<int> permuted(idx.size());
  double s = 0.0;
  for (const auto &p : perms) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      permuted[a] = idx[p[a]];
    s += permutation_sign(p) * t.at(permuted);
  }
  return s;
}

bool has_repeat(std::span<const int> idx) {
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b])
        return true;
  return false;
}

void check_oracle_dim(int dim) {
  if (dim < 1 || dim > kMaxOracleDim)
    throw dimension_error("oracle dimension " + std::to_string(dim) +
                          " outside 1.." + std::to_string(kMaxOracleDim));
}

} // namespace

DenseTensor::DenseTensor(int dim, int rank) : dim_(dim), rank_(rank) {
  check_oracle_dim(dim);
  if (rank < 0)
    throw rank_error("negative rank");
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i)
    n *= static_cast<std::size_t>(dim);
  entries_.assign(n, 0.0);
}

DenseTensor DenseTensor::vector(std::span<const double> coords) {
  DenseTensor t(static_cast<int>(coords.size()), 1);
  std::copy(coords.begin(), coords.end(), t.entries_.begin());
  return t;
}

std::size_t DenseTensor::offset(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != rank_)
    throw shape_error("expected " + std::to_string(rank_) + " indices, got " +
                      std::to_string(indices.size()));
  std::size_t off = 0;
  for (int i : indices) {
    if (i < 1 || i > dim_)
      throw dimension_error("tensor index " + std::to_string(i) +
                            " outside 1.." + std::to_string(dim_));
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i - 1);
  }
  return off;
}

double DenseTensor::at(std::span<const int> indices) const {
  return entries_[offset(indices)];
}

void DenseTensor::set(std::span<const int> indices, double value) {
  entries_[offset(indices)] = value;
}

std::vector<std::vector<int>> index_tuples(int dim, int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(rank, 1);
  while (true) {
    out.push_back(idx);
    int pos = rank - 1;
    while (pos >= 0 && idx[pos] == dim) {
      idx[pos] = 1;
      --pos;
    }
    if (pos < 0)
      break;
    ++idx[pos];
  }
  return out;
}

AntisymmetricTensor AntisymmetricTensor::checked(DenseTensor t, double tol) {
  const int k = t.rank();
  if (k >= 2) {
    const auto perms = permutations(k);
    std::vector<int> permuted(k);
    for (const auto &idx : index_tuples(t.dim(), k)) {
      const double v = t.at(idx);
      if (has_repeat(idx) && std::abs(v) > tol)
        throw invariant_error("nonzero entry with repeated indices");
      for (const auto &p : perms) {
        for (int a = 0; a < k; ++a)
          permuted[a] = idx[p[a]];
        if (std::abs(t.at(permuted) - permutation_sign(p) * v) > tol)
          throw invariant_error("tensor is not antisymmetric");
      }
    }
  }
  const bool overflow = k > t.dim();
  return AntisymmetricTensor(std::move(t), overflow);
}

int perm_symbol(std::span<const int> indices) {
  const int k = static_cast<int>(indices.size());
  std::vector<int> seen(k + 1, 0);
  for (int i : indices) {
    if (i < 1 || i > k || seen[i])
      return 0;
    seen[i] = 1;
  }
  std::vector<int> zero_based(indices.begin(), indices.end());
  for (int &i : zero_based)
    --i;
  return permutation_sign(zero_based);
}

int gen_kronecker(std::span<const int> upper, std::span<const int> lower) {
  if (upper.size() != lower.size())
    throw shape_error("generalized Kronecker symbol needs equal lengths");
  const int k = static_cast<int>(upper.size());
  // Leibniz expansion over permutations; entries are 0/1 so the sum is exact.
  int det = 0;
  for (const auto &p : permutations(k)) {
    int prod = 1;
    for (int a = 0; a < k && prod != 0; ++a)
      prod = upper[a] == lower[p[a]] ? prod : 0;
    det += permutation_sign(p) * prod;
  }
  return det;
}

DenseTensor tensor_product(const DenseTensor &a, const DenseTensor &b) {
  if (a.dim() != b.dim())
    throw dimension_error("tensor product dimension mismatch");
  DenseTensor out(a.dim(), a.rank() + b.rank());
  auto dst = out.entries();
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i)
    for (std::size_t j = 0; j < eb.size(); ++j)
      dst[i * eb.size() + j] = ea[i] * eb[j];
  return out;
}

AntisymmetricTensor antisymmetrize(const DenseTensor &t) {
  const int k = t.rank();
  if (k <= 1)
    return AntisymmetricTensor(t, false);
  DenseTensor out(t.dim(), k);
  if (k > t.dim())
    return AntisymmetricTensor(std::move(out), true);
  const auto perms = permutations(k);
  const double norm = factorial(k);
  for (const auto &idx : index_tuples(t.dim(), k))
    out.set(idx, signed_permutation_sum(t, idx, perms) / norm);
  return AntisymmetricTensor(std::move(out), false);
}

AntisymmetricTensor oracle_exterior(const AntisymmetricTensor &x,
                                    const AntisymmetricTensor &y) {
  if (x.dim() != y.dim())
    throw dimension_error("exterior product dimension mismatch");
  const int p = x.rank();
  const int q = y.rank();
  const int n = x.dim();
  DenseTensor out(n, p + q);
  if (p + q > n)
    return AntisymmetricTensor(std::move(out), true);
  const DenseTensor prod = tensor_product(x.tensor(), y.tensor());
  if (p + q <= 1)
    return AntisymmetricTensor(prod, false);
  const auto perms = permutations(p + q);
  const double norm = factorial(p) * factorial(q);
  for (const auto &idx : index_tuples(n, p + q))
    out.set(idx, signed_permutation_sum(prod, idx, perms) / norm);
  return AntisymmetricTensor(std::move(out), false);
}

AntisymmetricTensor oracle_simple_kvector(
    std::span<const std::vector<double>> vectors) {
  const int k = static_cast<int>(vectors.size());
  if (k == 0)
    throw rank_error("empty vector list");
  const int n = static_cast<int>(vectors[0].size());
  DenseTensor out(n, k);
  if (k > n)
    return AntisymmetricTensor::checked(std::move(out));
  std::vector<DenseTensor> factors;
  for (const auto &v : vectors) {
    if (static_cast<int>(v.size()) != n)
      throw dimension_error("vectors differ in dimension");
    factors.push_back(DenseTensor::vector(v));
  }
  for (const auto &order : index_tuples(k, k)) {
    const int eps = perm_symbol(order);
    if (eps == 0)
      continue;
    DenseTensor term = factors[order[0] - 1];
    for (int a = 1; a < k; ++a)
      term = tensor_product(term, factors[order[a] - 1]);
    auto dst = out.entries();
    const auto src = term.entries();
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] += eps * src[i];
  }
  return AntisymmetricTensor::checked(std::move(out));
}

Multivector to_blades(const DenseTensor &t) {
  const AntisymmetricTensor checked = AntisymmetricTensor::checked(t);
  std::vector<Multivector::Term> terms;
  const int k = t.rank();
  if (k == 0)
    return Multivector::scalar(t.dim(), t.entries()[0]);
  for (BladeIndex blade : blades_of_grade(t.dim(), k))
    terms.emplace_back(blade, checked.at(blade.indices()));
  return Multivector::from_terms(t.dim(), terms);
}

AntisymmetricTensor from_blades(const Multivector &x, int k) {
  if (!x.is_homogeneous(k))
    throw grade_error("from_blades expects a pure grade-" + std::to_string(k) +
                      " multivector");
  DenseTensor out(x.dim(), k);
  if (k == 0) {
    out.entries()[0] = x.scalar_part();
    return AntisymmetricTensor::checked(std::move(out));
  }
  const auto perms = permutations(k);
  std::vector<int> permuted(k);
  for (const auto &[blade, value] : x.terms()) {
    const auto idx = blade.indices();
    for (const auto &p : perms) {
      for (int a = 0; a < k; ++a)
        permuted[a] = idx[p[a]];
      out.set(permuted, permutation_sign(p) * value);
    }
  }
  return AntisymmetricTensor::checked(std::move(out));
}

double oracle_scalar_product(const DenseTensor &x, const DenseTensor &y,
                             std::span<const double> metric_row_major) {
  if (x.dim() != y.dim() || x.rank() != y.rank())
    throw shape_error("scalar product needs tensors of equal dim and rank");
  const int n = x.dim();
  const int k = x.rank();
  if (static_cast<int>(metric_row_major.size()) != n * n)
    throw shape_error("metric size mismatch");
  if (k == 0)
    return x.entries()[0] * y.entries()[0];
  // Lower every index of Y: Y_{i1..ik} = g_{i1 j1} ... g_{ik jk} Y^{j1..jk}.
  DenseTensor lowered = y;
  for (int slot = 0; slot < k; ++slot) {
    DenseTensor next(n, k);
    for (const auto &idx : index_tuples(n, k)) {
      std::vector<int> src = idx;
      double s = 0.0;
      for (int j = 1; j <= n; ++j) {
        src[slot] = j;
        s += metric_row_major[(idx[slot] - 1) * n + (j - 1)] * lowered.at(src);
      }
      next.set(idx, s);
    }
    lowered = std::move(next);
  }
  const auto ex = x.entries();
  const auto el = lowered.entries();
  double s = 0.0;
  for (std::size_t i = 0; i < ex.size(); ++i)
    s += ex[i] * el[i];
  return s / factorial(k);
}

} // namespace ga::oracle
