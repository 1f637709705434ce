#include "mubclass/orbits.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "mubclass/errors.hpp"

namespace mubclass {

namespace {

// Pascal triangle up to C(40, 40): random-access ranks in the hot loops.
struct RankTable {
  std::uint64_t c[41][41] = {};
  RankTable() {
    for (int i = 0; i <= 40; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
  }
  std::uint64_t rank(std::uint64_t mask) const {
    std::uint64_t r = 0;
    int i = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) r += c[std::countr_zero(m)][++i];
    return r;
  }
};

const RankTable& ranker() {
  static const RankTable t;
  return t;
}

// Visited storage, seeds marked by their scan-order rank for free.
struct BitsetMarker {
  std::vector<std::uint64_t> words;
  explicit BitsetMarker(std::uint64_t n) : words((n + 63) / 64, 0) {}
  bool test_and_set_rank(std::uint64_t i) {
    std::uint64_t& w = words[i >> 6];
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (w & bit) return true;
    w |= bit;
    return false;
  }
  bool test_and_set(std::uint64_t mask) { return test_and_set_rank(ranker().rank(mask)); }
  bool test_and_set_seed(std::uint64_t /*mask*/, std::uint64_t seed_rank) {
    return test_and_set_rank(seed_rank);
  }
};

struct HashMarker {
  std::unordered_set<std::uint64_t> seen;
  explicit HashMarker(std::uint64_t n) { seen.reserve(static_cast<std::size_t>(n)); }
  bool test_and_set(std::uint64_t mask) { return !seen.insert(mask).second; }
  bool test_and_set_seed(std::uint64_t mask, std::uint64_t /*seed_rank*/) {
    return test_and_set(mask);
  }
};

std::uint64_t apply_images(const int* images, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m; m &= m - 1)
    out |= std::uint64_t{1} << images[std::countr_zero(m)];
  return out;
}

template <typename Marker>
void classify_sweep(Marker& visited, int n, int k, std::uint64_t group_order,
                    const std::vector<int>& group_flat,
                    const std::vector<const int*>& rows, const ClassifyConfig& config,
                    OrbitPartition& part) {
  const std::uint64_t last_mask = ((std::uint64_t{1} << k) - 1) << (n - k);
  std::deque<std::uint64_t> queue;
  std::uint64_t seed_rank = 0;
  for (std::uint64_t seed = (std::uint64_t{1} << k) - 1;;
       seed = next_subset_mask(seed), ++seed_rank) {
    if (!visited.test_and_set_seed(seed, seed_rank)) {
      OrbitClass cls;
      cls.representative = {seed};
      cls.size = 1;
      std::vector<SubsetCode> members{{seed}};

      if (group_order) {
        const int* g = group_flat.data();
        for (std::uint64_t e = 0; e < group_order; ++e, g += n) {
          std::uint64_t img = apply_images(g, seed);
          if (!visited.test_and_set(img)) {
            ++cls.size;
            if (config.store_members) members.push_back({img});
          }
        }
      } else {
        queue.clear();
        queue.push_back(seed);
        while (!queue.empty()) {
          std::uint64_t t = queue.front();
          queue.pop_front();
          for (const int* row : rows) {
            std::uint64_t u = apply_images(row, t);
            if (!visited.test_and_set(u)) {
              ++cls.size;
              queue.push_back(u);
              if (config.store_members) members.push_back({u});
            }
          }
        }
      }

      if (config.store_members && cls.size <= config.member_limit) {
        std::sort(members.begin(), members.end());
        cls.members = std::move(members);
      }
      part.classes.push_back(std::move(cls));
    }
    if (seed == last_mask) break;
  }
}

}  // namespace

SubsetCode apply_generator(std::span<const int> images, SubsetCode s) {
  return {apply_images(images.data(), s.mask)};
}

std::vector<SubsetCode> orbit_closure(SubsetCode s, const TransformTable& table) {
  std::unordered_set<std::uint64_t> seen{s.mask};
  std::deque<std::uint64_t> queue{s.mask};
  while (!queue.empty()) {
    std::uint64_t t = queue.front();
    queue.pop_front();
    for (const auto& row : table.rows) {
      std::uint64_t u = apply_images(row.images.data(), t);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  std::vector<SubsetCode> out;
  out.reserve(seen.size());
  for (std::uint64_t m : seen) out.push_back({m});
  std::sort(out.begin(), out.end());
  return out;
}

OrbitPartition classify_all(int d, int k, const TransformTable& table,
                            const ClassifyConfig& config) {
  if (table.d != d) throw std::invalid_argument("table dimension does not match d");
  if (k < 1 || k > d + 1) throw std::invalid_argument("k must lie in 1..d+1");
  const int n = d + 1;
  const std::uint64_t total = binomial(n, k);
  if (total > config.enumeration_cap) {
    std::ostringstream os;
    os << "C(" << n << "," << k << ") = " << total << " exceeds the enumeration cap "
       << config.enumeration_cap;
    throw resource_limit_error(os.str());
  }

  OrbitPartition part;
  part.d = d;
  part.k = k;
  part.total = total;

  std::vector<const int*> rows;
  rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    if (static_cast<int>(row.images.size()) != n)
      throw std::invalid_argument("table row " + row.label + " has the wrong width");
    rows.push_back(row.images.data());
  }

  // group fast path: when the generated group is small, each orbit is one
  // sweep of the group elements over the seed
  std::vector<int> group_flat;
  std::uint64_t group_order = 0;  // nonzero selects the group sweep below
  try {
    PermutationGroup g = close_rows(table, config.group_order_cap);
    part.group_order = g.order();  // reported regardless of sweep strategy
    if (!config.force_bfs) {
      group_order = g.order();
      group_flat.reserve(group_order * n);
      for (const auto& el : g.elements)
        group_flat.insert(group_flat.end(), el.begin(), el.end());
    }
  } catch (const resource_limit_error&) {
    // closure exceeds the cap: order stays 0, sweep falls back to per-seed BFS
  }

  if (total <= config.bitset_threshold) {
    BitsetMarker visited(total);
    classify_sweep(visited, n, k, group_order, group_flat, rows, config, part);
  } else {
    HashMarker visited(total);
    classify_sweep(visited, n, k, group_order, group_flat, rows, config, part);
  }

  std::uint64_t covered = 0;
  for (const auto& cls : part.classes) covered += cls.size;
  if (covered != total)
    throw std::logic_error("orbit partition does not cover the subset space");
  return part;
}

}  // namespace mubclass
