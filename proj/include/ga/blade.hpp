#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace ga {

inline constexpr int kMaxDim = 12;

// Canonical basis blade e_{i1} ^ ... ^ e_{ik} with i1 < ... < ik.
// Bit (i-1) of the mask is set when index i takes part; the empty mask is the
// scalar blade.
class BladeIndex {
public:
  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(std::uint32_t mask) : mask_(mask) {}

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(mask_); }
  constexpr bool contains(int index) const {
    return (mask_ >> (index - 1)) & 1u;
  }
  // Highest index present, or 0 for the scalar blade.
  constexpr int max_index() const { return 32 - std::countl_zero(mask_); }
  constexpr bool fits(int dim) const { return (mask_ >> dim) == 0; }

  // 1-based, strictly increasing.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  static constexpr BladeIndex scalar() { return BladeIndex{}; }
  static constexpr BladeIndex vector(int index) {
    return BladeIndex{1u << (index - 1)};
  }

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;

  // Grade first, then lexicographic on the sorted index lists. For equal
  // grades the lowest index where the lists differ is the lowest bit of the
  // symmetric difference; whichever blade owns it sorts first.
  friend constexpr std::strong_ordering operator<=>(BladeIndex a,
                                                    BladeIndex b) {
    if (auto c = a.grade() <=> b.grade(); c != 0)
      return c;
    const std::uint32_t diff = a.mask_ ^ b.mask_;
    if (diff == 0)
      return std::strong_ordering::equal;
    const std::uint32_t low = diff & (~diff + 1);
    return (a.mask_ & low) ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }

private:
  std::uint32_t mask_ = 0;
};

// Number of transpositions needed to merge the factors of `a` followed by the
// factors of `b` into increasing order: pairs (i in a, j in b) with i > j.
constexpr int merge_inversions(BladeIndex a, BladeIndex b) {
  int count = 0;
  for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m);
    const std::uint32_t above =
        bit >= 31 ? 0u : a.mask() & ~((2u << bit) - 1u);
    count += std::popcount(above);
  }
  return count;
}

constexpr double parity_sign(int transpositions) {
  return (transpositions & 1) ? -1.0 : 1.0;
}

} // namespace ga
