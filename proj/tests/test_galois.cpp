#include <doctest.h>

#include "mubclass/galois.hpp"

using namespace mubclass;

TEST_SUITE("galois") {

TEST_CASE("GF(9) arithmetic") {
  GaloisField f(3, 2);
  CHECK(f.q() == 9);
  CHECK(f.modulus_name() == "x^2+1");
  // labels: a0 + 3*a1 for a0 + a1 x
  const int x = 3;
  CHECK(f.mul(x, x) == 2);       // x^2 = -1 = 2
  CHECK(f.add(x, x) == 6);       // 2x
  CHECK(f.add(1, 2) == 0);       // characteristic 3
  CHECK(f.mul(2, 2) == 1);
  SUBCASE("field axioms on labels") {
    for (int a = 0; a < 9; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      for (int b = 0; b < 9; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
  }
  SUBCASE("nonzero elements invertible") {
    for (int a = 1; a < 9; ++a) {
      bool has_inverse = false;
      for (int b = 1; b < 9; ++b) has_inverse |= f.mul(a, b) == 1;
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("GF(9) trace lands in F3 and is F3-linear") {
  GaloisField f(3, 2);
  for (int a = 0; a < 9; ++a) {
    CHECK(f.trace(a) >= 0);
    CHECK(f.trace(a) < 3);
  }
  // additivity
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % 3);
  // trace of the prime subfield element c is n*c
  CHECK(f.trace(1) == 2);
  CHECK(f.trace(2) == 1);
}

TEST_CASE("GF moduli are the fixed ones") {
  CHECK(GaloisField(3, 2).modulus_name() == "x^2+1");
}

TEST_CASE("GR(4,n) lifted moduli") {
  // Hensel lifts h with h(x^2) = (-1)^n f(x) f(-x) mod 4 of the fixed
  // GF(2^n) moduli f
  CHECK(GaloisRing4(2).modulus_name() == "x^2+x+1");
  CHECK(GaloisRing4(3).modulus_name() == "x^3+2x^2+x+3");
  CHECK(GaloisRing4(4).modulus_name() == "x^4+2x^2+3x+1");
}

TEST_CASE("GR(4,2) trace exponents") {
  GaloisRing4 ring(2);
  CHECK(ring.q() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int x = 0; x < 4; ++x) {
        int t = ring.trace_exponent(a, b, x);
        CHECK(t >= 0);
        CHECK(t < 4);
      }
  // y = 0 or x = 0 gives trace 0
  for (int x = 0; x < 4; ++x) CHECK(ring.trace_exponent(0, 0, x) == 0);
  for (int a = 0; a < 4; ++a) CHECK(ring.trace_exponent(a, 0, 0) == 0);
  // Tr fixes Z4: Tr(1*1) = Tr(1) = n mod 4 = 2 over GR(4,2)
  CHECK(ring.trace_exponent(1, 0, 1) == 2);
}

TEST_CASE("GR trace exponent is Frobenius-invariant") {
  // Frobenius acts on Teichmueller labels as GF(2^n) squaring and permutes
  // the trace summands, so Tr((t_a + 2 t_b) t_x) is unchanged when all
  // three labels are squared.
  for (int n = 2; n <= 4; ++n) {
    GaloisRing4 ring(n);
    GaloisField f2(2, n);
    const int q = ring.q();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int x = 0; x < q; ++x)
          CHECK(ring.trace_exponent(a, b, x) ==
                ring.trace_exponent(f2.mul(a, a), f2.mul(b, b), f2.mul(x, x)));
  }
}

TEST_CASE("GF(2,n) binary fields for the label arithmetic") {
  GaloisField f(2, 3);
  CHECK(f.q() == 8);
  CHECK(f.modulus_name() == "x^3+x+1");
  CHECK(f.trace(1) == 1);  // n odd
  CHECK(f.add(5, 5) == 0);
}

}  // TEST_SUITE
