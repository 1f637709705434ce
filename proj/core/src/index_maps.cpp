#include "mubclass/index_maps.hpp"

#include <stdexcept>
#include <string>

namespace mubclass {

namespace {

void check_range(int v, int lo, int hi, const char* name) {
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) +
                                " out of range [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");
}

void check_odd_prime(int d) {
  bool ok = d >= 3 && d % 2 == 1;
  for (long long f = 3; ok && f * f <= d; f += 2)
    if (d % f == 0) ok = false;
  if (!ok)
    throw std::invalid_argument("d = " + std::to_string(d) + " is not an odd prime");
}

}  // namespace

int mod_inverse(long long a, int d) {
  long long r = ((a % d) + d) % d;
  if (r == 0) throw std::invalid_argument("no inverse: argument divisible by the modulus");
  // Fermat: r^(d-2) mod d for prime d.
  long long result = 1, base = r, e = d - 2;
  while (e) {
    if (e & 1) result = result * base % d;
    base = base * base % d;
    e >>= 1;
  }
  return static_cast<int>(result);
}

int unitary_index_map(int x, int y, int d) {
  check_odd_prime(d);
  check_range(x, 0, d, "x");
  check_range(y, 0, d, "y");
  if (x == d) return y;
  if (y == 0) return d;
  if (y == d) return x;
  return ((x - mod_inverse(4LL * y, d)) % d + d) % d;
}

IndexMapResult vector_index_map(int x, int y, int b, int d) {
  check_odd_prime(d);
  check_range(x, 0, d, "x");
  check_range(y, 0, d, "y");
  check_range(b, 0, d - 1, "b");
  if (x == d) return {y, b};                    // identity generator
  if (y == d) return {x, b};                    // columns of M_x are basis x
  if (y == 0) return {d, (d - b) % d};          // Fourier collapse onto |−b⟩
  int z = unitary_index_map(x, y, d);
  int c = static_cast<int>((static_cast<long long>(b) * mod_inverse(2LL * y, d)) % d);
  return {z, c};
}

IndexMapResult conj_index_map(int y, int b, int d) {
  check_odd_prime(d);
  check_range(y, 0, d, "y");
  check_range(b, 0, d - 1, "b");
  if (y == d) return {d, b};  // computational vectors are real
  return {(d - y) % d, (d - b) % d};
}

}  // namespace mubclass
