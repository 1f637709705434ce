#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mubclass {

// A k-subset of the d+1 basis indices {0, ..., d}, packed into a 64-bit
// mask (bit i <=> basis i is in the subset).  d <= 37 keeps every subset
// within 38 bits.  Mask-value order doubles as the canonical subset order:
// ascending mask value is exactly the colexicographic order of the index
// tuples, so ranks computed from the combinatorial number system agree
// with iteration order.
struct SubsetCode {
  std::uint64_t mask = 0;

  static SubsetCode from_indices(std::span<const int> indices);
  std::vector<int> indices() const;
  int popcount() const;

  friend bool operator==(SubsetCode a, SubsetCode b) { return a.mask == b.mask; }
  friend bool operator<(SubsetCode a, SubsetCode b) { return a.mask < b.mask; }
};

// Exact binomial coefficient; throws std::overflow_error if the value does
// not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// Rank of the subset in ascending-mask order among all popcount(mask)-sub-
// sets: sum of C(c_i, i+1) over the sorted member indices c_0 < c_1 < ...
std::uint64_t subset_rank(SubsetCode s);

// Next k-subset mask in ascending order (Gosper's hack).  The caller stops
// once the result exceeds the final mask for the ground set.
std::uint64_t next_subset_mask(std::uint64_t mask);

}  // namespace mubclass
