#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "mubclass/errors.hpp"
#include "mubclass/transform_table.hpp"

using namespace mubclass;

namespace {

bool is_perm(const std::vector<int>& v) {
  std::set<int> seen(v.begin(), v.end());
  if (seen.size() != v.size()) return false;
  return *seen.begin() == 0 && *seen.rbegin() == int(v.size()) - 1;
}

}  // namespace

TEST_SUITE("transform_table") {

TEST_CASE("the d=5 grid, all 42 entries") {
  auto t = build_table_analytic(5);
  REQUIRE(t.rows.size() == 7);
  const int want[7][6] = {{5, 1, 3, 2, 4, 0}, {5, 2, 4, 3, 0, 1},
                          {5, 3, 0, 4, 1, 2}, {5, 4, 1, 0, 2, 3},
                          {5, 0, 2, 1, 3, 4}, {0, 1, 2, 3, 4, 5},
                          {0, 4, 3, 2, 1, 5}};
  const char* labels[7] = {"M0", "M1", "M2", "M3", "M4", "M5", "conj"};
  for (int r = 0; r < 7; ++r) {
    CHECK(t.rows[r].label == labels[r]);
    REQUIRE(t.rows[r].images.size() == 6);
    for (int c = 0; c < 6; ++c) CHECK(t.rows[r].images[c] == want[r][c]);
  }
}

TEST_CASE("d=7 conjugation row") {
  auto t = build_table_analytic(7);
  const std::vector<int> want{0, 6, 5, 4, 3, 2, 1, 7};
  CHECK(t.rows.back().label == "conj");
  CHECK(t.rows.back().images == want);
}

TEST_CASE("rows are permutations") {
  for (int d : {3, 5, 7, 11, 13, 17, 19, 23}) {
    auto t = build_table_analytic(d);
    CHECK(t.rows.size() == std::size_t(d + 2));
    for (const auto& row : t.rows) CHECK(is_perm(row.images));
  }
}

TEST_CASE("analytic equals numeric") {
  for (int d : {3, 5, 7}) {
    auto a = build_table_analytic(d);
    auto n = build_table_numeric(build_prime_mubs(d));
    REQUIRE(a.rows.size() == n.rows.size());
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      CHECK(a.rows[r].label == n.rows[r].label);
      CHECK(a.rows[r].images == n.rows[r].images);
    }
  }
}

TEST_CASE("analytic rejects bad dimensions") {
  CHECK_THROWS_AS(build_table_analytic(4), std::invalid_argument);
  CHECK_THROWS_AS(build_table_analytic(9), std::invalid_argument);
}

TEST_CASE("non-closing generator throws with its label") {
  auto fam = build_prime_mubs(5);
  // a random unitary-ish matrix will not map the family onto itself;
  // use a diagonal phase twist of the identity, unitary but non-closing
  ExtraGenerator bad;
  bad.label = "twist";
  bad.matrix.assign(25, cplx{0, 0});
  for (int j = 0; j < 5; ++j)
    bad.matrix[j * 5 + j] = std::polar(1.0, 0.41 * (j + 1));
  CHECK_THROWS_AS(build_table_numeric(fam, std::span(&bad, 1)), closure_violation);
  try {
    build_table_numeric(fam, std::span(&bad, 1));
  } catch (const closure_violation& e) {
    CHECK(e.generator_label() == "twist");
  }
}

TEST_CASE("kSkipRow drops the offending generator") {
  auto fam = build_prime_mubs(5);
  ExtraGenerator bad;
  bad.label = "twist";
  bad.matrix.assign(25, cplx{0, 0});
  for (int j = 0; j < 5; ++j)
    bad.matrix[j * 5 + j] = std::polar(1.0, 0.41 * (j + 1));
  auto t = build_table_numeric(fam, std::span(&bad, 1), ClosurePolicy::kSkipRow);
  CHECK(t.rows.size() == 7);  // M0..M5 + conj survive, twist dropped
  for (const auto& row : t.rows) CHECK(row.label != "twist");
}

TEST_CASE("permutation extras act as relabelings") {
  auto fam = build_prime_mubs(5);
  // the identity relabeling closes trivially and induces the identity row
  ExtraGenerator id;
  id.label = "Pid";
  id.perm = {0, 1, 2, 3, 4};
  auto t = build_table_numeric(fam, std::span(&id, 1));
  REQUIRE(t.rows.size() == 8);
  CHECK(t.rows.back().label == "Pid");
  CHECK(t.rows.back().images == std::vector<int>{0, 1, 2, 3, 4, 5});
  REQUIRE(t.rows.back().perm.has_value());
  CHECK(*t.rows.back().perm == id.perm);
}

TEST_CASE("group closure orders") {
  const std::pair<int, std::uint64_t> want[] = {
      {5, 60}, {7, 336}, {11, 1320}, {13, 1092}};
  for (auto [d, order] : want) {
    auto g = close_rows(build_table_analytic(d));
    CHECK(g.npoints == d + 1);
    CHECK(g.order() == order);
    // contains the identity
    std::vector<int> id(d + 1);
    for (int i = 0; i <= d; ++i) id[i] = i;
    bool has_id = false;
    for (const auto& e : g.elements) has_id |= e == id;
    CHECK(has_id);
  }
}

TEST_CASE("group order is a multiple of 2d") {
  for (int d : {5, 7, 11, 13, 17, 19}) {
    auto g = close_rows(build_table_analytic(d));
    CHECK(g.order() % (2 * d) == 0);
  }
}

TEST_CASE("closure respects the order cap") {
  CHECK_THROWS_AS(close_rows(build_table_analytic(7), 100), resource_limit_error);
}

}  // TEST_SUITE
