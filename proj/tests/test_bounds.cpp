#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "mubclass/bounds.hpp"
#include "mubclass/subset_code.hpp"

using namespace mubclass;

TEST_SUITE("bounds") {

TEST_CASE("known bound values") {
  CHECK(theorem1_bound(5, 3) == 2);
  CHECK(theorem1_bound(5, 1) == 1);
  CHECK(theorem1_bound(5, 5) == 1);
  CHECK(theorem1_bound(7, 4) == 5);     // floor(C(8,4)/14) = floor(70/14)
  CHECK(theorem1_bound(13, 6) == 115);  // floor(C(14,6)/26) = floor(3003/26)
}

TEST_CASE("bound equals the closed form for interior k") {
  for (int d : {5, 7, 11, 13, 17, 19})
    for (int k = 2; k < d; ++k)
      CHECK(theorem1_bound(d, k) == binomial(d + 1, k) / (2 * d));
}

TEST_CASE("bound rejects bad arguments") {
  CHECK_THROWS_AS(theorem1_bound(4, 2), std::invalid_argument);
  CHECK_THROWS_WITH_AS(theorem1_bound(5, 7),
                       "k must lie in 1..d for the bound (k = 7)",
                       std::invalid_argument);
  CHECK_THROWS_AS(theorem1_bound(5, 0), std::invalid_argument);
}

TEST_CASE("complexity estimate, small exact case") {
  auto est = complexity_estimates(5, 3, 2);
  CHECK(est.d == 5);
  CHECK(est.k == 3);
  CHECK(est.s == 2);
  // C(6,3) = 20 subsets
  CHECK(est.t_u == doctest::Approx(20.0 * 7 * 3 * std::log2(3.0)).epsilon(1e-12));
  CHECK(est.t_s == doctest::Approx(20.0 * 512).epsilon(1e-12));          // s^(2d-1) = 2^9
  CHECK(est.t_r == doctest::Approx(20.0 * 125 * 24 * 5 * 3).epsilon(1e-12));
  CHECK(est.log10_t_s == doctest::Approx(std::log10(10240.0)).epsilon(1e-12));
}

TEST_CASE("k=1 reads log2(1) as 1") {
  auto est = complexity_estimates(5, 1, 2);
  CHECK(est.t_u == doctest::Approx(6.0 * 7 * 1 * 1).epsilon(1e-12));
}

TEST_CASE("log-domain survives huge magnitudes") {
  auto est = complexity_estimates(11, 6, 10);
  // t_s = C(12,6) * 10^21 = 924e21
  CHECK(est.log10_t_s == doctest::Approx(std::log10(924.0) + 21).epsilon(1e-12));
  CHECK(std::isfinite(est.log10_t_r));
  auto big = complexity_estimates(37, 19, 10);
  CHECK(std::isfinite(big.log10_t_s));
  CHECK(big.log10_t_s > 70);  // s^(2d-1) = 10^73 alone
}

TEST_CASE("sampling depth below 2 is rejected") {
  CHECK_THROWS_WITH_AS(complexity_estimates(5, 3, 1),
                       "sampling depth s must be at least 2",
                       std::invalid_argument);
  CHECK_THROWS_AS(complexity_estimates(5, 3, 0), std::invalid_argument);
}

TEST_CASE("curves cover the requested grid at midpoint k") {
  const std::vector<int> dims{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const std::vector<int> depths{2, 5, 10};
  auto rows = emit_complexity_curves(dims, depths);
  REQUIRE(rows.size() == dims.size() * depths.size());
  std::size_t i = 0;
  for (int d : dims)
    for (int s : depths) {
      CHECK(rows[i].d == d);
      CHECK(rows[i].s == s);
      auto ref = complexity_estimates(d, (d + 1) / 2, s);
      CHECK(rows[i].log10_t_u == doctest::Approx(ref.log10_t_u).epsilon(1e-12));
      CHECK(rows[i].log10_t_s == doctest::Approx(ref.log10_t_s).epsilon(1e-12));
      CHECK(rows[i].log10_t_r == doctest::Approx(ref.log10_t_r).epsilon(1e-12));
      ++i;
    }
}

TEST_CASE("t_u grows slowest at scale") {
  // the finite-set count is polynomially bounded where the others explode
  for (int d : {11, 19, 37}) {
    auto est = complexity_estimates(d, (d + 1) / 2, 2);
    CHECK(est.log10_t_u < est.log10_t_s);
    CHECK(est.log10_t_u < est.log10_t_r);
  }
}

}  // TEST_SUITE
