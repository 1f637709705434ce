#include "mubclass/transform_table.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "mubclass/errors.hpp"
#include "mubclass/index_maps.hpp"

namespace mubclass {

namespace {

bool is_permutation(const std::vector<int>& images, int npoints) {
  if (static_cast<int>(images.size()) != npoints) return false;
  std::vector<bool> seen(npoints, false);
  for (int v : images) {
    if (v < 0 || v >= npoints || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Apply one generator to every vector of basis y and require the images to
// match family vectors inside one common basis.  Returns that basis index.
template <typename ApplyFn>
int matched_basis_image(const MubFamily& fam, int y, const std::string& label,
                        ApplyFn&& apply) {
  const int d = fam.d();
  int z = -1;
  std::vector<cplx> w(d);
  for (int b = 0; b < d; ++b) {
    apply(fam.vector(y, b), w);
    auto m = match_vector(w, fam);
    if (!m) {
      std::ostringstream os;
      os << "generator " << label << ": image of basis " << y << " vector " << b
         << " matches no family vector";
      throw closure_violation(label, os.str());
    }
    if (b == 0) {
      z = m->basis_index;
    } else if (m->basis_index != z) {
      std::ostringstream os;
      os << "generator " << label << ": basis " << y << " splits across bases " << z
         << " and " << m->basis_index;
      throw closure_violation(label, os.str());
    }
  }
  return z;
}

}  // namespace

TransformTable build_table_analytic(int d) {
  Dimension::odd_prime(d);  // validates
  TransformTable table;
  table.d = d;
  table.rows.reserve(d + 2);
  for (int x = 0; x <= d; ++x) {
    GeneratorRow row;
    row.label = "M" + std::to_string(x);
    row.images.resize(d + 1);
    for (int y = 0; y <= d; ++y) row.images[y] = unitary_index_map(x, y, d);
    table.rows.push_back(std::move(row));
  }
  GeneratorRow conj;
  conj.label = "conj";
  conj.images.resize(d + 1);
  for (int y = 0; y <= d; ++y) conj.images[y] = conj_index_map(y, 0, d).z;
  table.rows.push_back(std::move(conj));
  for (const auto& row : table.rows)
    if (!is_permutation(row.images, d + 1))
      throw std::logic_error("analytic table row " + row.label + " is not a permutation");
  return table;
}

TransformTable build_table_numeric(const MubFamily& fam,
                                   std::span<const ExtraGenerator> extras,
                                   ClosurePolicy policy) {
  const int d = fam.d();
  TransformTable table;
  table.d = d;

  auto add_row = [&](GeneratorRow row) {
    if (!is_permutation(row.images, d + 1))
      throw closure_violation(row.label,
                              "generator " + row.label + " does not permute the bases");
    table.rows.push_back(std::move(row));
  };

  auto try_row = [&](const std::string& label, auto&& apply,
                     std::optional<std::vector<int>> perm) {
    GeneratorRow row;
    row.label = label;
    row.images.resize(d + 1);
    row.perm = std::move(perm);
    try {
      for (int y = 0; y <= d; ++y) row.images[y] = matched_basis_image(fam, y, label, apply);
      add_row(std::move(row));
    } catch (const closure_violation&) {
      if (policy == ClosurePolicy::kThrow) throw;
      // kSkipRow: drop this generator
    }
  };

  for (int x = 0; x <= d; ++x) {
    const auto& basis = fam.bases[x];
    try_row("M" + std::to_string(x),
            [&](std::span<const cplx> v, std::vector<cplx>& out) {
              // columns of M_x are the vectors of basis x
              for (int m = 0; m < d; ++m) {
                cplx acc{0.0, 0.0};
                for (int j = 0; j < d; ++j)
                  acc += basis[static_cast<std::size_t>(j) * d + m] * v[j];
                out[m] = acc;
              }
            },
            std::nullopt);
  }

  try_row("conj",
          [&](std::span<const cplx> v, std::vector<cplx>& out) {
            for (int m = 0; m < d; ++m) out[m] = std::conj(v[m]);
          },
          std::nullopt);

  for (const auto& extra : extras) {
    if (!extra.perm.empty()) {
      if (!is_permutation(extra.perm, d))
        throw std::invalid_argument("extra generator " + extra.label +
                                    " is not a valid component permutation");
      try_row(extra.label,
              [&](std::span<const cplx> v, std::vector<cplx>& out) {
                for (int j = 0; j < d; ++j) out[extra.perm[j]] = v[j];
              },
              extra.perm);
    } else {
      if (static_cast<int>(extra.matrix.size()) != d * d)
        throw std::invalid_argument("extra generator " + extra.label +
                                    " has a matrix of the wrong size");
      try_row(extra.label,
              [&](std::span<const cplx> v, std::vector<cplx>& out) {
                for (int m = 0; m < d; ++m) {
                  cplx acc{0.0, 0.0};
                  for (int j = 0; j < d; ++j)
                    acc += extra.matrix[static_cast<std::size_t>(m) * d + j] * v[j];
                  out[m] = acc;
                }
              },
              std::nullopt);
    }
  }
  return table;
}

PermutationGroup close_rows(const TransformTable& table, std::uint64_t max_order) {
  const int npoints = table.d + 1;
  PermutationGroup group;
  group.npoints = npoints;

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 0xcbf29ce484222325ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ull;
      }
      return h;
    }
  };
  std::unordered_set<std::vector<int>, VecHash> seen;

  std::vector<int> identity(npoints);
  for (int i = 0; i < npoints; ++i) identity[i] = i;
  seen.insert(identity);
  group.elements.push_back(identity);

  // breadth-first closure under composition with the generator rows
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    std::vector<int> g = group.elements[head];  // copy: vector may reallocate
    for (const auto& row : table.rows) {
      std::vector<int> c(npoints);
      for (int i = 0; i < npoints; ++i) c[i] = row.images[g[i]];
      if (seen.insert(c).second) {
        if (group.elements.size() >= max_order)
          throw resource_limit_error("generated group exceeds the order cap " +
                                     std::to_string(max_order));
        group.elements.push_back(std::move(c));
      }
    }
  }
  return group;
}

}  // namespace mubclass
