#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mubclass/mub_family.hpp"

namespace mubclass {

// One generator's action on basis indices: images[y] is the basis that the
// generator sends basis y to.  Rows derived from a component permutation
// also carry that permutation.
struct GeneratorRow {
  std::string label;
  std::vector<int> images;                  // size d+1
  std::optional<std::vector<int>> perm;     // component permutation, size d
};

struct TransformTable {
  int d = 0;
  std::vector<GeneratorRow> rows;
};

// Closed-form table for an odd prime d: rows M_0..M_d plus conjugation.
TransformTable build_table_analytic(int d);

// What to do when a generator fails to close over the family.
enum class ClosurePolicy { kThrow, kSkipRow };

// An additional generator for the numeric table: either an explicit d x d
// unitary (row-major) or a component permutation new[j] = v[perm^{-1}(j)].
struct ExtraGenerator {
  std::string label;
  std::vector<cplx> matrix;  // d*d, used when perm is empty
  std::vector<int> perm;     // size d when this is a permutation generator
};

// Table derived by matrix action and matching: one row per basis-change
// unitary M_x, one for conjugation, one per extra generator.  Every vector
// image must match a family vector and all vectors of a basis must land in
// a single basis; otherwise closure_violation (or the row is dropped under
// kSkipRow).
TransformTable build_table_numeric(const MubFamily& fam,
                                   std::span<const ExtraGenerator> extras = {},
                                   ClosurePolicy policy = ClosurePolicy::kThrow);

// The permutation group on basis indices generated by the table rows,
// closed under composition.  Throws resource_limit_error beyond max_order.
struct PermutationGroup {
  int npoints = 0;
  std::vector<std::vector<int>> elements;  // includes identity
  std::uint64_t order() const { return elements.size(); }
};

PermutationGroup close_rows(const TransformTable& table,
                            std::uint64_t max_order = 1'000'000);

}  // namespace mubclass
