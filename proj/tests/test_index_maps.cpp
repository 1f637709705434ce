#include <doctest.h>

#include <stdexcept>

#include <set>

#include "mubclass/index_maps.hpp"

using namespace mubclass;

TEST_SUITE("index_maps") {

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(4, 5) == 4);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(2, 13) == 7);
  for (int d : {3, 5, 7, 11, 13})
    for (int a = 1; a < d; ++a) CHECK(a * mod_inverse(a, d) % d == 1);
  CHECK_THROWS_AS(mod_inverse(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(mod_inverse(5, 5), std::invalid_argument);
}

TEST_CASE("unitary map examples") {
  CHECK(unitary_index_map(0, 1, 5) == 1);
  CHECK(unitary_index_map(2, 0, 5) == 5);
  CHECK(unitary_index_map(3, 5, 5) == 3);
  CHECK(unitary_index_map(5, 4, 5) == 4);
  CHECK(unitary_index_map(1, 2, 7) == 0);
}

TEST_CASE("unitary map rows are permutations") {
  for (int d : {3, 5, 7, 11, 13}) {
    for (int x = 0; x <= d; ++x) {
      std::set<int> images;
      for (int y = 0; y <= d; ++y) {
        int z = unitary_index_map(x, y, d);
        CHECK(z >= 0);
        CHECK(z <= d);
        images.insert(z);
      }
      CHECK(images.size() == std::size_t(d + 1));
    }
  }
}

TEST_CASE("vector map examples") {
  auto r = vector_index_map(0, 1, 2, 5);
  CHECK(r.z == 1);
  CHECK(r.c == 1);
  r = vector_index_map(5, 3, 4, 5);
  CHECK(r.z == 3);
  CHECK(r.c == 4);
  r = vector_index_map(0, 5, 2, 5);
  CHECK(r.z == 0);
  CHECK(r.c == 2);
  r = vector_index_map(0, 0, 2, 5);
  CHECK(r.z == 5);
  CHECK(r.c == 3);
}

TEST_CASE("vector map is consistent with the basis map") {
  for (int d : {3, 5, 7}) {
    for (int x = 0; x <= d; ++x)
      for (int y = 0; y <= d; ++y)
        for (int b = 0; b < d; ++b)
          CHECK(vector_index_map(x, y, b, d).z == unitary_index_map(x, y, d));
  }
}

TEST_CASE("vector map permutes vectors within a basis") {
  for (int d : {5, 7}) {
    for (int x = 0; x <= d; ++x)
      for (int y = 0; y <= d; ++y) {
        std::set<int> cs;
        for (int b = 0; b < d; ++b) cs.insert(vector_index_map(x, y, b, d).c);
        CHECK(cs.size() == std::size_t(d));
      }
  }
}

TEST_CASE("conjugation examples") {
  auto r = conj_index_map(1, 0, 5);
  CHECK(r.z == 4);
  CHECK(r.c == 0);
  r = conj_index_map(5, 3, 5);
  CHECK(r.z == 5);
  CHECK(r.c == 3);
  r = conj_index_map(2, 3, 7);
  CHECK(r.z == 5);
  CHECK(r.c == 4);
}

TEST_CASE("conjugation is an involution") {
  for (int d : {3, 5, 7, 11}) {
    for (int y = 0; y <= d; ++y)
      for (int b = 0; b < d; ++b) {
        auto once = conj_index_map(y, b, d);
        auto twice = conj_index_map(once.z, once.c, d);
        CHECK(twice.z == y);
        CHECK(twice.c == b);
      }
  }
}

TEST_CASE("range preconditions") {
  CHECK_THROWS_AS(unitary_index_map(-1, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(unitary_index_map(0, 6, 5), std::invalid_argument);
  CHECK_THROWS_AS(vector_index_map(0, 0, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(conj_index_map(6, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(unitary_index_map(0, 0, 4), std::invalid_argument);
}

}  // TEST_SUITE
