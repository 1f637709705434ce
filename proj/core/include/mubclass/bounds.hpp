#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mubclass {

// Upper bound on the number of inequivalent k-subsets of the d+1 bases:
// 1 for k == 1 and k == d, otherwise floor(C(d+1, k) / (2d)) — the
// generated group has order at least 2d, so generic orbits have at least
// 2d members.  Requires odd prime d and 1 <= k <= d.
std::uint64_t theorem1_bound(int d, int k);

// Operation-count estimates for the three classification strategies at
// sample depth s:
//   t_u = C(d+1,k) * (d+2) * k * log2(k)        (finite unitary group)
//   t_s = C(d+1,k) * s^(2d-1)                   (parameter-space sampling)
//   t_r = C(d+1,k) * d^k * (d^2-1) * d * k      (direct unitary search)
// with log2(1) read as 1.  Computed in log space; the plain fields
// overflow to +inf only if a value exceeds double range.
struct ComplexityEstimate {
  int d = 0, k = 0, s = 0;
  double t_u = 0, t_s = 0, t_r = 0;
  double log10_t_u = 0, log10_t_s = 0, log10_t_r = 0;
};

ComplexityEstimate complexity_estimates(int d, int k, int s);

// One curve row per (d, s) at the midpoint subset size k = (d+1)/2.
struct ComplexityCurveRow {
  int d = 0, s = 0;
  double log10_t_u = 0, log10_t_s = 0, log10_t_r = 0;
};

std::vector<ComplexityCurveRow> emit_complexity_curves(std::span<const int> dims,
                                                       std::span<const int> depths);

}  // namespace mubclass
