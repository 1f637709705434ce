#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mubclass/mub_family.hpp"
#include "mubclass/subset_code.hpp"

namespace mubclass {

// Hyperspherical parametrization of a pure state: d-1 half-angle chained
// amplitudes plus d phases.  Redundant (global phase, angle wrapping) but
// surjective, which is all the optimizer needs.
struct StateParams {
  std::vector<double> alphas;  // size d-1
  std::vector<double> phis;    // size d
};

std::vector<cplx> state_from_params(const StateParams& p);
StateParams params_from_state(std::span<const cplx> v);

// Sum over the subset's bases of the base-2 Shannon entropy of the
// measurement distribution of psi in that basis.
double entropy_sum(std::span<const cplx> psi, SubsetCode subset, const MubFamily& fam);

struct EntropyOptConfig {
  int random_starts = 64;
  bool informed_starts = true;  // seed from each family vector of the subset's bases
  int max_iters = 800;
  double step = 0.3;            // initial simplex edge
  double ftol = 1e-10;
  double xtol = 1e-9;
  std::uint64_t seed = 1;
  int threads = 0;              // 0 = available parallelism
  std::uint64_t enumeration_cap = std::uint64_t{1} << 31;
};

struct MinEntropyResult {
  double value = 0;
  int starts_used = 0;
  int converged_starts = 0;  // starts that met ftol/xtol before the iteration cap
};

// Minimum of entropy_sum over pure states: multistart Nelder-Mead over the
// hyperspherical parameters.  Deterministic for fixed (seed, subset).
MinEntropyResult min_entropy(SubsetCode subset, const MubFamily& fam,
                             const EntropyOptConfig& config = {});

struct SubsetEntropy {
  SubsetCode subset;
  double min_entropy = 0;
  int starts_used = 0;
  int converged_starts = 0;
};

struct EntropyCluster {
  std::vector<SubsetCode> members;  // sorted
  double min_value = 0;
  double max_value = 0;
};

struct EntropyReport {
  int d = 0;
  int k = 0;
  double gap = 0;
  std::vector<SubsetEntropy> subsets;   // ascending subset order
  std::vector<EntropyCluster> clusters; // ascending by min_value
};

// Minimize over every k-subset (or a caller-supplied list, e.g. orbit
// representatives — "sampling mode") and group the minima by single-linkage
// clustering with the given gap.  Full enumeration beyond the cap without
// an explicit subset list throws resource_limit_error.
EntropyReport entropy_partition(int d, int k, const MubFamily& fam, double gap,
                                const EntropyOptConfig& config = {},
                                std::span<const SubsetCode> subsets = {});

}  // namespace mubclass
