#include <doctest.h>

#include <stdexcept>

#include "mubclass/dimension.hpp"

using namespace mubclass;

TEST_SUITE("dimension") {

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(37));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(35));
}

TEST_CASE("odd prime accepts and labels") {
  auto dim = Dimension::odd_prime(13);
  CHECK(dim.d == 13);
  CHECK(dim.p == 13);
  CHECK(dim.n == 1);
  CHECK(dim.is_odd_prime());
}

TEST_CASE("odd prime rejects") {
  CHECK_THROWS_WITH_AS(Dimension::odd_prime(4), "4 is not an odd prime",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dimension::odd_prime(2), "2 is not an odd prime",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dimension::odd_prime(9), "9 is not an odd prime",
                       std::invalid_argument);
}

TEST_CASE("prime power accepts") {
  auto dim = Dimension::prime_power(2, 3);
  CHECK(dim.d == 8);
  CHECK(dim.p == 2);
  CHECK(dim.n == 3);
  CHECK_FALSE(dim.is_odd_prime());
}

TEST_CASE("prime power rejects") {
  CHECK_THROWS_WITH_AS(Dimension::prime_power(6, 2), "6 is not prime",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dimension::prime_power(3, 1),
                       "prime-power exponent must be at least 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dimension::prime_power(2, 5),
                       "prime power 2^5 exceeds the dimension cap 16",
                       std::invalid_argument);
}

TEST_CASE("parse dispatches") {
  CHECK(Dimension::parse(5).is_odd_prime());
  auto nine = Dimension::parse(9);
  CHECK(nine.p == 3);
  CHECK(nine.n == 2);
  auto sixteen = Dimension::parse(16);
  CHECK(sixteen.p == 2);
  CHECK(sixteen.n == 4);
}

TEST_CASE("parse rejects composites and small d") {
  CHECK_THROWS_WITH_AS(Dimension::parse(6), "6 is not a prime power",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dimension::parse(12), "12 is not a prime power",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Dimension::parse(2),
                       "dimension 2 is below the supported range",
                       std::invalid_argument);
  CHECK_THROWS_AS(Dimension::parse(1), std::invalid_argument);
  CHECK_THROWS_AS(Dimension::parse(32), std::invalid_argument);  // over the cap
}

}  // TEST_SUITE
