#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mubclass/mub_family.hpp"
#include "mubclass/orbits.hpp"
#include "mubclass/transform_table.hpp"

namespace mubclass {

enum class PermSearchMode {
  kAuto,        // exhaustive for d <= exhaustive_cap, else structured
  kExhaustive,  // all of S_d
  kStructured,  // semi-affine maps x -> Ax + b over GF(2)^n (p = 2 only)
};

struct PermDiscoveryConfig {
  PermSearchMode mode = PermSearchMode::kAuto;
  int exhaustive_cap = 9;  // largest d for which S_d is searched outright
  int threads = 0;         // 0 = available parallelism
  std::optional<std::filesystem::path> cache_dir;
};

struct PermGenerator {
  std::vector<int> perm;            // bijection on computational labels
  std::vector<int> induced_images;  // its row of basis-index images, size d+1
};

struct PermSet {
  std::vector<PermGenerator> perms;  // sorted by one-line notation, identity first
  bool exhaustive = false;           // full S_d was searched
  bool from_cache = false;
};

// Component permutations P (acting as new[j] = v[P^{-1}(j)]) that map the
// family onto itself up to per-vector global phases.  Exhaustive search of
// S_d up to the cap; for d = 16 the structured mode searches the 322,560
// invertible-affine maps over GF(2)^4 instead, which is a restriction —
// the result is then a verified subgroup, not a certified completion.
// Results are cached as JSON keyed by construction and tolerance.
PermSet discover_permutations(const MubFamily& fam,
                              const PermDiscoveryConfig& config = {});

// The numeric table extended with one row per discovered permutation.
TransformTable build_extended_table(const MubFamily& fam, const PermSet& perms);

struct PrimePowerClassification {
  MubFamily family;
  PermSet perms;
  TransformTable table;
  OrbitPartition partition;
};

// End-to-end pipeline: build the p^n family, discover permutations,
// extend the table, classify k-subsets.
PrimePowerClassification classify_prime_power(int p, int n, int k,
                                              const PermDiscoveryConfig& perm_config = {},
                                              const ClassifyConfig& classify_config = {},
                                              int cap = 16);

}  // namespace mubclass
