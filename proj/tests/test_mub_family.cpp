#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mubclass/mub_family.hpp"

using namespace mubclass;

TEST_SUITE("mub_family") {

TEST_CASE("shape and computational basis") {
  auto fam = build_prime_mubs(5);
  CHECK(fam.d() == 5);
  CHECK(fam.basis_count() == 6);
  CHECK(fam.construction == "eq1");
  // basis d is the identity: vector a is the a-th standard vector
  auto v = fam.vector(5, 2);
  for (int j = 0; j < 5; ++j)
    CHECK(std::abs(v[j] - (j == 2 ? cplx{1, 0} : cplx{0, 0})) < 1e-15);
}

TEST_CASE("component values follow the phase rule") {
  const int d = 7;
  auto fam = build_prime_mubs(d);
  const double norm = 1.0 / std::sqrt(double(d));
  for (int x = 0; x < d; ++x)
    for (int a = 0; a < d; ++a) {
      auto v = fam.vector(x, a);
      for (int j = 0; j < d; ++j) {
        int e = ((x * j * j - a * j) % d + d) % d;
        cplx want = std::polar(norm, 2 * std::numbers::pi * e / d);
        CHECK(std::abs(v[j] - want) < 1e-12);
      }
    }
}

TEST_CASE("unbiasedness holds for primes") {
  for (int d : {3, 5, 7, 13}) {
    auto fam = build_prime_mubs(d);
    auto rep = check_unbiased(fam);
    CHECK(rep.pass);
    CHECK(rep.worst_deviation < 1e-10);
  }
}

TEST_CASE("unbiasedness holds for prime powers") {
  for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    auto fam = build_prime_power_mubs(p, n);
    auto rep = check_unbiased(fam);
    CHECK(rep.pass);
    CHECK(rep.worst_deviation < 1e-12);
  }
}

TEST_CASE("perturbation is detected") {
  auto fam = build_prime_mubs(5);
  fam.bases[1][3] += cplx{1e-3, 0};
  auto rep = check_unbiased(fam);
  CHECK_FALSE(rep.pass);
  CHECK(rep.worst_deviation >= 1e-4);
  CHECK_FALSE(rep.detail.empty());
}

TEST_CASE("build_mubs dispatches on the dimension") {
  CHECK(build_mubs(5).construction == "eq1");
  CHECK(build_mubs(9).construction == "gf9[1,0,1]");
  CHECK(build_mubs(8).construction == "gr4[1,1,0,1]");
  CHECK_THROWS_AS(build_mubs(6), std::invalid_argument);
}

TEST_CASE("match_vector finds every family vector") {
  for (int d : {3, 5}) {
    auto fam = build_prime_mubs(d);
    for (int x = 0; x <= d; ++x)
      for (int a = 0; a < d; ++a) {
        auto m = match_vector(fam.vector(x, a), fam);
        REQUIRE(m.has_value());
        CHECK(m->basis_index == x);
        CHECK(m->vector_index == a);
      }
  }
}

TEST_CASE("match_vector ignores a global phase") {
  auto fam = build_prime_mubs(5);
  auto v = fam.vector(2, 3);
  std::vector<cplx> rotated(v.begin(), v.end());
  for (auto& c : rotated) c *= std::polar(1.0, 0.7);
  auto m = match_vector(rotated, fam);
  REQUIRE(m.has_value());
  CHECK(m->basis_index == 2);
  CHECK(m->vector_index == 3);
}

TEST_CASE("match_vector rejects junk") {
  auto fam = build_prime_mubs(5);
  std::vector<cplx> v(5, cplx{0.5, 0});  // not normalized
  CHECK_THROWS_WITH_AS(match_vector(v, fam),
                       "match_vector requires a unit-norm input",
                       std::invalid_argument);
  std::vector<cplx> wrong_len(4, cplx{0.5, 0});
  CHECK_THROWS_AS(match_vector(wrong_len, fam), std::invalid_argument);
  // normalized but outside the family
  std::vector<cplx> outside(5, cplx{0, 0});
  outside[0] = std::sqrt(0.5);
  outside[1] = std::sqrt(0.5);
  CHECK_FALSE(match_vector(outside, fam).has_value());
}

TEST_CASE("at() carries the indices") {
  auto fam = build_prime_mubs(3);
  auto bv = fam.at(1, 2);
  CHECK(bv.basis_index == 1);
  CHECK(bv.vector_index == 2);
  CHECK(bv.amplitudes.size() == 3);
}

TEST_CASE("even-family entries are fourth roots of unity") {
  auto fam = build_prime_power_mubs(2, 4);
  const double norm = 1.0 / 4.0;
  for (int x = 0; x < 16; ++x)
    for (int a = 0; a < 16; ++a)
      for (auto c : fam.vector(x, a)) {
        bool fourth_root = std::abs(c - cplx{norm, 0}) < 1e-15 ||
                           std::abs(c - cplx{-norm, 0}) < 1e-15 ||
                           std::abs(c - cplx{0, norm}) < 1e-15 ||
                           std::abs(c - cplx{0, -norm}) < 1e-15;
        CHECK(fourth_root);
      }
}

}  // TEST_SUITE
