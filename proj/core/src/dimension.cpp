#include "mubclass/dimension.hpp"

#include <stdexcept>
#include <string>

namespace mubclass {

bool is_prime(int m) {
  if (m < 2) return false;
  for (int f = 2; f * f <= m; ++f)
    if (m % f == 0) return false;
  return true;
}

Dimension Dimension::odd_prime(int d) {
  if (d < 3 || d % 2 == 0 || !is_prime(d))
    throw std::invalid_argument(std::to_string(d) + " is not an odd prime");
  return {d, d, 1};
}

Dimension Dimension::prime_power(int p, int n, int cap) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n < 2) throw std::invalid_argument("prime-power exponent must be at least 2");
  long long d = 1;
  for (int i = 0; i < n; ++i) {
    d *= p;
    if (d > cap)
      throw std::invalid_argument("prime power " + std::to_string(p) + "^" +
                                  std::to_string(n) + " exceeds the dimension cap " +
                                  std::to_string(cap));
  }
  return {static_cast<int>(d), p, n};
}

Dimension Dimension::parse(int d, int cap) {
  if (d < 2) throw std::invalid_argument(std::to_string(d) + " is not a prime power");
  int p = 0;
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) {
    // d itself is prime.
    if (d == 2) throw std::invalid_argument("dimension 2 is below the supported range");
    return odd_prime(d);
  }
  int n = 0;
  int m = d;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1) throw std::invalid_argument(std::to_string(d) + " is not a prime power");
  return prime_power(p, n, cap);
}

}  // namespace mubclass
