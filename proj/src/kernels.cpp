#include "ga/kernels.hpp"

#include <exception>

#include <omp.h>

namespace ga::kernels {

namespace {

Multivector blade_pair_product(const Algebra &algebra, BladeIndex a,
                               BladeIndex b) {
  const int n = algebra.dim();
  return geometric_product(algebra, Multivector::from_terms(n, {{a, 1.0}}),
                           Multivector::from_terms(n, {{b, 1.0}}));
}

} // namespace

int max_threads() { return omp_get_max_threads(); }

CayleyTable build_cayley_table(const Algebra &algebra) {
  const int n = algebra.dim();
  const long side = static_cast<long>(blade_count(n));
  std::vector<Multivector> entries(static_cast<std::size_t>(side * side),
                                   Multivector(n));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long a = 0; a < side; ++a) {
    try {
      for (long b = 0; b < side; ++b)
        entries[static_cast<std::size_t>((a << n) | b)] = blade_pair_product(
            algebra, BladeIndex(static_cast<std::uint32_t>(a)),
            BladeIndex(static_cast<std::uint32_t>(b)));
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return CayleyTable(n, std::move(entries));
}

CayleyTable build_cayley_table_serial(const Algebra &algebra) {
  const int n = algebra.dim();
  const std::uint32_t side = static_cast<std::uint32_t>(blade_count(n));
  std::vector<Multivector> entries;
  entries.reserve(static_cast<std::size_t>(side) * side);
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      entries.push_back(blade_pair_product(algebra, BladeIndex(a), BladeIndex(b)));
  return CayleyTable(n, std::move(entries));
}

Matrix blade_gram_matrix(const Algebra &algebra) {
  const auto blades = all_blades(algebra.dim());
  const int side = static_cast<int>(blades.size());
  Matrix gram(side, side);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      gram(i, j) = algebra.blade_product(blades[i], blades[j]);
  return gram;
}

Matrix blade_gram_matrix_serial(const Algebra &algebra) {
  const auto blades = all_blades(algebra.dim());
  const int side = static_cast<int>(blades.size());
  Matrix gram(side, side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      gram(i, j) = algebra.blade_product(blades[i], blades[j]);
  return gram;
}

} // namespace ga::kernels
