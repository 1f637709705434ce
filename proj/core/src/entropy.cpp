#include "mubclass/entropy.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "mubclass/errors.hpp"

namespace mubclass {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

using Params = std::vector<double>;  // alphas (d-1) then phis (d)

void state_into(const Params& theta, int d, std::vector<cplx>& out) {
  double prod = 1.0;
  for (int m = 0; m < d - 1; ++m) {
    double half = 0.5 * theta[m];
    out[m] = std::polar(prod * std::cos(half), theta[d - 1 + m]);
    prod *= std::sin(half);
  }
  out[d - 1] = std::polar(prod, theta[2 * d - 2]);
}

double entropy_of(const std::vector<cplx>& psi, std::uint64_t subset_mask,
                  const MubFamily& fam) {
  const int d = fam.d();
  double total = 0.0;
  for (std::uint64_t m = subset_mask; m; m &= m - 1) {
    int x = std::countr_zero(m);
    const auto& basis = fam.bases[x];
    for (int a = 0; a < d; ++a) {
      const cplx* row = basis.data() + static_cast<std::size_t>(a) * d;
      cplx ov{0.0, 0.0};
      for (int j = 0; j < d; ++j) ov += std::conj(row[j]) * psi[j];
      double p = std::norm(ov);
      if (p > 1e-300) total -= p * std::log2(p);
    }
  }
  return total;
}

struct NmOutcome {
  double value;
  bool converged;
};

// Nelder-Mead with standard coefficients (reflect 1, expand 2, contract
// 0.5, shrink 0.5) on an axis-aligned initial simplex.
template <typename F>
NmOutcome nelder_mead(F&& f, const Params& x0, const EntropyOptConfig& cfg) {
  const int n = static_cast<int>(x0.size());
  std::vector<Params> pts(n + 1, x0);
  for (int i = 0; i < n; ++i) pts[i + 1][i] += cfg.step;
  std::vector<double> vals(n + 1);
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  Params centroid(n), xr(n), xe(n), xc(n);
  bool converged = false;
  for (int it = 0; it < cfg.max_iters; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vals[a] < vals[b]; });
    {
      std::vector<Params> p2(n + 1);
      std::vector<double> v2(n + 1);
      for (int i = 0; i <= n; ++i) {
        p2[i] = std::move(pts[order[i]]);
        v2[i] = vals[order[i]];
      }
      pts = std::move(p2);
      vals = std::move(v2);
    }
    if (vals[n] - vals[0] < cfg.ftol) {
      double spread = 0.0;
      for (int i = 1; i <= n; ++i)
        for (int j = 0; j < n; ++j)
          spread = std::max(spread, std::abs(pts[i][j] - pts[0][j]));
      if (spread < cfg.xtol) {
        converged = true;
        break;
      }
    }
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += pts[i][j];
      centroid[j] = s / n;
    }
    for (int j = 0; j < n; ++j) xr[j] = 2.0 * centroid[j] - pts[n][j];
    double fr = f(xr);
    if (fr < vals[0]) {
      for (int j = 0; j < n; ++j) xe[j] = 3.0 * centroid[j] - 2.0 * pts[n][j];
      double fe = f(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      for (int j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (pts[n][j] - centroid[j]);
      double fc = f(xc);
      if (fc < vals[n]) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int j = 0; j < n; ++j) pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  return {*std::min_element(vals.begin(), vals.end()), converged};
}

void validate_subset(SubsetCode subset, int d, int expect_k = -1) {
  if (subset.mask == 0) throw std::invalid_argument("subset must be non-empty");
  if (subset.mask >> (d + 1))
    throw std::invalid_argument("subset contains a basis index above d");
  if (expect_k >= 0 && subset.popcount() != expect_k)
    throw std::invalid_argument("subset size does not match k");
}

// All start points for one subset, informed first, then the seeded stream.
std::vector<Params> build_starts(SubsetCode subset, const MubFamily& fam,
                                 const EntropyOptConfig& cfg) {
  const int d = fam.d();
  std::vector<Params> starts;
  if (cfg.informed_starts) {
    for (int x : subset.indices()) {
      for (int a = 0; a < d; ++a) {
        StateParams sp = params_from_state(fam.vector(x, a));
        Params theta(2 * d - 1);
        std::copy(sp.alphas.begin(), sp.alphas.end(), theta.begin());
        std::copy(sp.phis.begin(), sp.phis.end(), theta.begin() + (d - 1));
        starts.push_back(std::move(theta));
      }
    }
  }
  std::mt19937_64 rng(splitmix64(splitmix64(cfg.seed) ^ subset.mask));
  std::uniform_real_distribution<double> alpha_dist(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  for (int s = 0; s < cfg.random_starts; ++s) {
    Params theta(2 * d - 1);
    for (int m = 0; m < d - 1; ++m) theta[m] = alpha_dist(rng);
    for (int m = 0; m < d; ++m) theta[d - 1 + m] = phi_dist(rng);
    starts.push_back(std::move(theta));
  }
  return starts;
}

}  // namespace

std::vector<cplx> state_from_params(const StateParams& p) {
  const int d = static_cast<int>(p.phis.size());
  if (static_cast<int>(p.alphas.size()) != d - 1)
    throw std::invalid_argument("StateParams sizes must be d-1 alphas and d phis");
  Params theta(2 * d - 1);
  std::copy(p.alphas.begin(), p.alphas.end(), theta.begin());
  std::copy(p.phis.begin(), p.phis.end(), theta.begin() + (d - 1));
  std::vector<cplx> v(d);
  state_into(theta, d, v);
  return v;
}

StateParams params_from_state(std::span<const cplx> v) {
  const int d = static_cast<int>(v.size());
  StateParams p;
  p.alphas.resize(d - 1);
  p.phis.resize(d);
  double prod = 1.0;
  for (int m = 0; m < d - 1; ++m) {
    if (prod < 1e-14) {
      p.alphas[m] = 0.0;
      continue;
    }
    double c = std::clamp(std::abs(v[m]) / prod, -1.0, 1.0);
    p.alphas[m] = 2.0 * std::acos(c);
    prod *= std::sin(0.5 * p.alphas[m]);
  }
  for (int m = 0; m < d; ++m) p.phis[m] = std::arg(v[m]);
  return p;
}

double entropy_sum(std::span<const cplx> psi, SubsetCode subset, const MubFamily& fam) {
  const int d = fam.d();
  if (static_cast<int>(psi.size()) != d)
    throw std::invalid_argument("state length does not match the dimension");
  validate_subset(subset, d);
  std::vector<cplx> copy(psi.begin(), psi.end());
  return entropy_of(copy, subset.mask, fam);
}

MinEntropyResult min_entropy(SubsetCode subset, const MubFamily& fam,
                             const EntropyOptConfig& config) {
  const int d = fam.d();
  validate_subset(subset, d);
  if (config.random_starts < 0 || (config.random_starts == 0 && !config.informed_starts))
    throw std::invalid_argument("at least one start is required");

  auto starts = build_starts(subset, fam, config);
  std::vector<cplx> psi(d);
  auto objective = [&](const Params& theta) {
    state_into(theta, d, psi);
    return entropy_of(psi, subset.mask, fam);
  };

  MinEntropyResult result;
  result.starts_used = static_cast<int>(starts.size());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x0 : starts) {
    NmOutcome out = nelder_mead(objective, x0, config);
    best = std::min(best, out.value);
    if (out.converged) ++result.converged_starts;
  }
  // roundoff in the p*log2(p) sum can leave a tiny negative residue at H = 0
  result.value = std::max(best, 0.0);
  return result;
}

EntropyReport entropy_partition(int d, int k, const MubFamily& fam, double gap,
                                const EntropyOptConfig& config,
                                std::span<const SubsetCode> subsets) {
  if (d != fam.d()) throw std::invalid_argument("d does not match the family");
  if (k < 1 || k > d + 1) throw std::invalid_argument("k must lie in 1..d+1");
  if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");

  std::vector<SubsetCode> work;
  if (subsets.empty()) {
    const std::uint64_t total = binomial(d + 1, k);
    if (total > config.enumeration_cap) {
      std::ostringstream os;
      os << "C(" << d + 1 << "," << k << ") = " << total
         << " exceeds the enumeration cap; supply a representative list (sampling mode)";
      throw resource_limit_error(os.str());
    }
    work.reserve(static_cast<std::size_t>(total));
    const std::uint64_t last = ((std::uint64_t{1} << k) - 1) << (d + 1 - k);
    for (std::uint64_t m = (std::uint64_t{1} << k) - 1;; m = next_subset_mask(m)) {
      work.push_back({m});
      if (m == last) break;
    }
  } else {
    work.assign(subsets.begin(), subsets.end());
    for (SubsetCode s : work) validate_subset(s, d, k);
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
  }

  EntropyReport report;
  report.d = d;
  report.k = k;
  report.gap = gap;
  report.subsets.resize(work.size());

  // Parallel over subsets; per-subset work is serial, so the per-seed
  // start stream is identical under any thread count.
  const int workers =
      std::min<int>(thread_count(config.threads), static_cast<int>(work.size()));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= work.size()) break;
      MinEntropyResult r = min_entropy(work[i], fam, config);
      report.subsets[i] = {work[i], r.value, r.starts_used, r.converged_starts};
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }

  // single-linkage clustering on the sorted minima
  std::vector<int> by_value(report.subsets.size());
  std::iota(by_value.begin(), by_value.end(), 0);
  std::stable_sort(by_value.begin(), by_value.end(), [&](int a, int b) {
    return report.subsets[a].min_entropy < report.subsets[b].min_entropy;
  });
  EntropyCluster current;
  auto flush = [&] {
    if (!current.members.empty()) {
      std::sort(current.members.begin(), current.members.end());
      report.clusters.push_back(std::move(current));
      current = {};
    }
  };
  double prev = 0.0;
  for (std::size_t i = 0; i < by_value.size(); ++i) {
    const auto& rec = report.subsets[by_value[i]];
    if (!current.members.empty() && rec.min_entropy - prev >= gap) flush();
    if (current.members.empty()) {
      current.min_value = rec.min_entropy;
    }
    current.max_value = rec.min_entropy;
    current.members.push_back(rec.subset);
    prev = rec.min_entropy;
  }
  flush();
  return report;
}

}  // namespace mubclass
