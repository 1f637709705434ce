#include "mubclass/prime_power.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mubclass/errors.hpp"

namespace mubclass {

namespace {

int thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Does the permutation (acting as new[j] = v[perm^{-1}(j)]) map every
// family vector onto a family vector, each basis landing in one basis?
// Fills images[y] on success.
bool verify_perm(const MubFamily& fam, const std::vector<int>& perm,
                 std::vector<int>& images) {
  const int d = fam.d();
  std::vector<cplx> w(d);
  images.assign(d + 1, -1);
  // computational basis permutes onto itself
  images[d] = d;
  for (int y = 0; y < d; ++y) {
    int z = -1;
    for (int b = 0; b < d; ++b) {
      auto v = fam.vector(y, b);
      for (int j = 0; j < d; ++j) w[perm[j]] = v[j];
      auto m = match_vector(w, fam);
      if (!m) return false;
      if (b == 0)
        z = m->basis_index;
      else if (m->basis_index != z)
        return false;
    }
    images[y] = z;
  }
  return true;
}

// Cheap rejection: image of one non-flat vector must match some family
// vector.  Basis-0 vectors are characters (any relabeling of a character
// pattern often matches), so basis 1 gives the real discrimination.
bool prune_candidate(const MubFamily& fam, const std::vector<int>& perm,
                     std::vector<cplx>& scratch) {
  const int d = fam.d();
  auto v = fam.vector(1, 0);
  for (int j = 0; j < d; ++j) scratch[perm[j]] = v[j];
  return match_vector(scratch, fam).has_value();
}

// Lehmer-code unranking: the idx-th permutation of 0..d-1 in lexicographic
// order, so worker threads can jump into the S_d stream.
std::vector<int> permutation_at(std::uint64_t idx, int d) {
  std::vector<std::uint64_t> fact(d, 1);
  for (int i = 1; i < d; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool(d);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(d);
  for (int i = d - 1; i >= 0; --i) {
    std::uint64_t f = fact[i];
    int pos = static_cast<int>(idx / f);
    idx %= f;
    out.push_back(pool[pos]);
    pool.erase(pool.begin() + pos);
  }
  return out;
}

std::vector<std::vector<int>> search_exhaustive(const MubFamily& fam, int threads) {
  const int d = fam.d();
  std::uint64_t total = 1;
  for (int i = 2; i <= d; ++i) total *= i;

  const int workers = thread_count(threads);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::vector<std::vector<int>>> found(workers);
  std::vector<std::thread> pool;
  auto run = [&](int w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) return;
    std::vector<int> perm = permutation_at(lo, d);
    std::vector<cplx> scratch(d);
    std::vector<int> images;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (prune_candidate(fam, perm, scratch) && verify_perm(fam, perm, images))
        found[w].push_back(perm);
      std::next_permutation(perm.begin(), perm.end());
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::vector<int>> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

// Semi-affine candidates x -> Ax + b over GF(2)^n: all invertible A
// (rows built outside the growing row space) times all translations.
std::vector<std::vector<int>> search_structured_gf2(const MubFamily& fam, int threads) {
  const int d = fam.d();
  int n = 0;
  while ((1 << n) < d) ++n;
  if ((1 << n) != d)
    throw std::invalid_argument("structured search requires d = 2^n");

  auto span_of = [&](const std::vector<int>& rows) {
    std::vector<int> s{0};
    s.reserve(std::size_t{1} << rows.size());
    for (int r : rows) {
      std::size_t sz = s.size();
      for (std::size_t i = 0; i < sz; ++i) s.push_back(s[i] ^ r);
    }
    return s;
  };

  // enumerate invertible matrices as independent row tuples
  std::vector<std::vector<int>> mats;
  std::vector<int> rows;
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      mats.push_back(rows);
      return;
    }
    auto sp = span_of(rows);
    std::vector<bool> in_span(d, false);
    for (int v : sp) in_span[v] = true;
    for (int r = 1; r < d; ++r) {
      if (in_span[r]) continue;
      rows.push_back(r);
      self(self, depth + 1);
      rows.pop_back();
    }
  };
  recurse(recurse, 0);

  auto apply_mat = [&](const std::vector<int>& a, int x) {
    int y = 0;
    for (int r = 0; r < n; ++r) y |= (std::popcount(static_cast<unsigned>(a[r] & x)) & 1) << r;
    return y;
  };

  const int workers = thread_count(threads);
  std::vector<std::vector<std::vector<int>>> found(workers);
  std::atomic<std::size_t> next{0};
  auto run = [&](int w) {
    std::vector<cplx> scratch(d);
    std::vector<int> images;
    std::vector<int> perm(d), translated(d);
    for (;;) {
      std::size_t mi = next.fetch_add(1);
      if (mi >= mats.size()) break;
      for (int x = 0; x < d; ++x) perm[x] = apply_mat(mats[mi], x);
      for (int b = 0; b < d; ++b) {
        for (int x = 0; x < d; ++x) translated[x] = perm[x] ^ b;
        if (prune_candidate(fam, translated, scratch) &&
            verify_perm(fam, translated, images))
          found[w].push_back(translated);
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::vector<int>> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

// Empty string when the set forms a group; otherwise a description of the defect.
std::string closure_defect(const std::vector<PermGenerator>& perms, int d) {
  std::set<std::vector<int>> members;
  for (const auto& g : perms) members.insert(g.perm);
  std::vector<int> comp(d), inv(d);
  for (const auto& g : perms) {
    for (int i = 0; i < d; ++i) inv[g.perm[i]] = i;
    if (!members.count(inv)) return "discovered permutation set is not closed under inverse";
    for (const auto& h : perms) {
      for (int i = 0; i < d; ++i) comp[i] = h.perm[g.perm[i]];
      if (!members.count(comp))
        return "discovered permutation set is not closed under composition";
    }
  }
  return {};
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const MubFamily& fam) {
  std::ostringstream name;
  name << "perms_p" << fam.dim.p << "_n" << fam.dim.n << "_" << fam.construction
       << "_tol" << fam.tolerance << ".json";
  std::string s = name.str();
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = '_';
  return dir / s;
}

std::optional<std::vector<std::vector<int>>> load_cache(
    const std::filesystem::path& file, const MubFamily& fam, bool expect_exhaustive) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || j.value("construction", "") != fam.construction ||
      j.value("p", -1) != fam.dim.p || j.value("n", -1) != fam.dim.n ||
      j.value("tolerance", -1.0) != fam.tolerance ||
      j.value("exhaustive", !expect_exhaustive) != expect_exhaustive ||
      !j.contains("perms") || !j["perms"].is_array())
    return std::nullopt;
  std::vector<std::vector<int>> perms;
  for (const auto& p : j["perms"]) {
    if (!p.is_array()) return std::nullopt;
    perms.push_back(p.get<std::vector<int>>());
  }
  return perms;
}

void store_cache(const std::filesystem::path& file, const MubFamily& fam,
                 bool exhaustive, const std::vector<PermGenerator>& perms) {
  nlohmann::json j;
  j["schema"] = 1;
  j["p"] = fam.dim.p;
  j["n"] = fam.dim.n;
  j["construction"] = fam.construction;
  j["tolerance"] = fam.tolerance;
  j["exhaustive"] = exhaustive;
  auto& arr = j["perms"] = nlohmann::json::array();
  for (const auto& g : perms) arr.push_back(g.perm);
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ofstream out(file);
  if (out) out << j.dump() << "\n";
}

}  // namespace

PermSet discover_permutations(const MubFamily& fam, const PermDiscoveryConfig& config) {
  const int d = fam.d();
  PermSearchMode mode = config.mode;
  if (mode == PermSearchMode::kAuto) {
    if (d <= config.exhaustive_cap)
      mode = PermSearchMode::kExhaustive;
    else if (fam.dim.p == 2)
      mode = PermSearchMode::kStructured;
    else
      throw resource_limit_error(
          "permutation search cap exceeded: d = " + std::to_string(d) +
          " is beyond the exhaustive cap " + std::to_string(config.exhaustive_cap) +
          " and the structured mode covers only p = 2");
  }
  if (mode == PermSearchMode::kExhaustive && d > 12)
    throw resource_limit_error("exhaustive permutation search refused for d > 12");
  const bool exhaustive = mode == PermSearchMode::kExhaustive;

  PermSet result;
  result.exhaustive = exhaustive;

  std::optional<std::filesystem::path> file;
  if (config.cache_dir) file = cache_file(*config.cache_dir, fam);

  std::vector<std::vector<int>> raw;
  if (file) {
    if (auto cached = load_cache(*file, fam, exhaustive)) {
      raw = std::move(*cached);
      result.from_cache = true;
    }
  }
  if (!result.from_cache) {
    raw = exhaustive ? search_exhaustive(fam, config.threads)
                     : search_structured_gf2(fam, config.threads);
  }

  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  result.perms.reserve(raw.size());
  std::vector<int> images;
  std::string defect;
  for (auto& p : raw) {
    if (static_cast<int>(p.size()) != d || !verify_perm(fam, p, images)) {
      defect = "discovered permutation fails verification";
      break;
    }
    result.perms.push_back({std::move(p), images});
  }
  if (defect.empty() &&
      (result.perms.empty() || result.perms.front().perm != permutation_at(0, d)))
    defect = "identity permutation missing from discovery result";
  if (defect.empty()) defect = closure_defect(result.perms, d);

  if (!defect.empty()) {
    if (result.from_cache) {
      // stale, truncated, or foreign cache: rediscover from scratch and overwrite
      PermDiscoveryConfig retry = config;
      retry.cache_dir.reset();
      PermSet fresh = discover_permutations(fam, retry);
      if (file) store_cache(*file, fam, exhaustive, fresh.perms);
      return fresh;
    }
    throw std::logic_error(defect);
  }

  if (file && !result.from_cache) store_cache(*file, fam, exhaustive, result.perms);
  return result;
}

TransformTable build_extended_table(const MubFamily& fam, const PermSet& perms) {
  std::vector<ExtraGenerator> extras;
  extras.reserve(perms.perms.size());
  int i = 0;
  for (const auto& g : perms.perms) {
    ExtraGenerator e;
    e.label = "P" + std::to_string(i++);
    e.perm = g.perm;
    extras.push_back(std::move(e));
  }
  return build_table_numeric(fam, extras);
}

PrimePowerClassification classify_prime_power(int p, int n, int k,
                                              const PermDiscoveryConfig& perm_config,
                                              const ClassifyConfig& classify_config,
                                              int cap) {
  PrimePowerClassification out{
      n == 1 ? build_prime_mubs(p) : build_prime_power_mubs(p, n, cap), {}, {}, {}};
  out.perms = discover_permutations(out.family, perm_config);
  out.table = build_extended_table(out.family, out.perms);
  out.partition = classify_all(out.family.d(), k, out.table, classify_config);
  return out;
}

}  // namespace mubclass
