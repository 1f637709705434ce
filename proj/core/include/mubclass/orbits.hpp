#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mubclass/subset_code.hpp"
#include "mubclass/transform_table.hpp"

namespace mubclass {

// Image of a subset under one basis-index map.
SubsetCode apply_generator(std::span<const int> images, SubsetCode s);

// Full orbit of s under the table rows (breadth-first closure), sorted
// ascending.
std::vector<SubsetCode> orbit_closure(SubsetCode s, const TransformTable& table);

struct OrbitClass {
  SubsetCode representative;  // minimal member in mask order
  std::uint64_t size = 0;
  std::optional<std::vector<SubsetCode>> members;  // sorted; omitted above member_limit
};

struct OrbitPartition {
  int d = 0;
  int k = 0;
  std::uint64_t total = 0;           // == C(d+1, k)
  std::uint64_t group_order = 0;     // 0 only when the closure exceeded its cap
  std::vector<OrbitClass> classes;   // ordered by representative
};

struct ClassifyConfig {
  std::uint64_t enumeration_cap = std::uint64_t{1} << 31;
  std::uint64_t group_order_cap = 1'000'000;  // fall back to BFS beyond this
  bool force_bfs = false;
  bool store_members = false;
  std::uint64_t member_limit = 1'000'000;  // per class, when store_members
  // visited-set storage: flat bitset over combinatorial ranks up to this
  // subset count, hash set on raw masks beyond it
  std::uint64_t bitset_threshold = std::uint64_t{1} << 31;
};

// Partition all k-subsets of the d+1 bases into equivalence classes under
// the group generated by the table rows.  Seeds are scanned in ascending
// mask order, so class representatives come out sorted and minimal.
// Throws resource_limit_error when C(d+1, k) exceeds the enumeration cap.
OrbitPartition classify_all(int d, int k, const TransformTable& table,
                            const ClassifyConfig& config = {});

}  // namespace mubclass
