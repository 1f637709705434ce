#include "mubclass/subset_code.hpp"

#include <bit>
#include <stdexcept>

namespace mubclass {

SubsetCode SubsetCode::from_indices(std::span<const int> indices) {
  SubsetCode s;
  for (int i : indices) {
    if (i < 0 || i >= 64) throw std::invalid_argument("subset index out of range");
    std::uint64_t bit = std::uint64_t{1} << i;
    if (s.mask & bit) throw std::invalid_argument("duplicate subset index");
    s.mask |= bit;
  }
  return s;
}

std::vector<int> SubsetCode::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount()));
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int SubsetCode::popcount() const { return std::popcount(mask); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t m = static_cast<std::uint64_t>(n - k + i);
    // r * m / i is exact at every step; guard the multiply.
    std::uint64_t g = r / i;
    std::uint64_t rem = r % i;
    std::uint64_t term = rem * m / i;
    if (g > (UINT64_MAX - term) / m) throw std::overflow_error("binomial overflows 64 bits");
    r = g * m + term;
  }
  return r;
}

std::uint64_t subset_rank(SubsetCode s) {
  std::uint64_t rank = 0;
  int i = 0;
  for (std::uint64_t m = s.mask; m; m &= m - 1) {
    rank += binomial(std::countr_zero(m), ++i);
  }
  return rank;
}

std::uint64_t next_subset_mask(std::uint64_t mask) {
  std::uint64_t u = mask & (~mask + 1);
  std::uint64_t v = mask + u;
  if (v == 0) return ~std::uint64_t{0};  // ripple off the top; caller's end guard fires
  return v + (((v ^ mask) / u) >> 2);
}

}  // namespace mubclass
