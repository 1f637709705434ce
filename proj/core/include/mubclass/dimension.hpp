#pragma once

namespace mubclass {

// A dimension for which the complete family of d+1 mutually unbiased bases
// is constructed.  Either an odd prime (n == 1) or a proper prime power
// p^n with n >= 2.  Proper prime powers are capped (default 16) because the
// permutation search above that size is out of reach.
struct Dimension {
  int d = 0;
  int p = 0;
  int n = 1;

  bool is_odd_prime() const { return n == 1; }

  // d must be an odd prime >= 3.
  static Dimension odd_prime(int d);

  // p prime, n >= 2, p^n <= cap.
  static Dimension prime_power(int p, int n, int cap = 16);

  // Factor d and dispatch to one of the above.  Rejects non-prime-powers.
  static Dimension parse(int d, int cap = 16);
};

bool is_prime(int m);

}  // namespace mubclass
