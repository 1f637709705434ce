#include "mubclass/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "mubclass/dimension.hpp"
#include "mubclass/subset_code.hpp"

namespace mubclass {

namespace {

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

constexpr double kLn10 = 2.302585092994046;

}  // namespace

std::uint64_t theorem1_bound(int d, int k) {
  Dimension::odd_prime(d);
  if (k < 1 || k > d)
    throw std::invalid_argument("k must lie in 1..d for the bound (k = " +
                                std::to_string(k) + ")");
  if (k == 1 || k == d) return 1;
  return binomial(d + 1, k) / (2ull * d);
}

ComplexityEstimate complexity_estimates(int d, int k, int s) {
  Dimension::odd_prime(d);
  if (k < 1 || k > d + 1) throw std::invalid_argument("k must lie in 1..d+1");
  if (s < 2) throw std::invalid_argument("sampling depth s must be at least 2");

  const double ln_bin = log_binomial(d + 1, k);
  const double ln_log2k = std::log(k == 1 ? 1.0 : std::log2(static_cast<double>(k)));

  const double ln_tu = ln_bin + std::log(d + 2.0) + std::log(static_cast<double>(k)) + ln_log2k;
  const double ln_ts = ln_bin + (2.0 * d - 1.0) * std::log(static_cast<double>(s));
  const double ln_tr = ln_bin + k * std::log(static_cast<double>(d)) +
                       std::log(static_cast<double>(d) * d - 1.0) +
                       std::log(static_cast<double>(d)) + std::log(static_cast<double>(k));

  ComplexityEstimate e;
  e.d = d;
  e.k = k;
  e.s = s;
  e.log10_t_u = ln_tu / kLn10;
  e.log10_t_s = ln_ts / kLn10;
  e.log10_t_r = ln_tr / kLn10;
  e.t_u = std::exp(ln_tu);
  e.t_s = std::exp(ln_ts);
  e.t_r = std::exp(ln_tr);
  return e;
}

std::vector<ComplexityCurveRow> emit_complexity_curves(std::span<const int> dims,
                                                       std::span<const int> depths) {
  std::vector<ComplexityCurveRow> rows;
  rows.reserve(dims.size() * depths.size());
  for (int d : dims) {
    const int k = (d + 1) / 2;
    for (int s : depths) {
      ComplexityEstimate e = complexity_estimates(d, k, s);
      rows.push_back({d, s, e.log10_t_u, e.log10_t_s, e.log10_t_r});
    }
  }
  return rows;
}

}  // namespace mubclass
