#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mubclass/dimension.hpp"

namespace mubclass {

using cplx = std::complex<double>;

struct BasisVector {
  int basis_index = 0;   // x in {0..d}
  int vector_index = 0;  // a in {0..d-1}
  std::vector<cplx> amplitudes;
};

// The complete family of d+1 mutually unbiased bases.  Basis x in
// {0, ..., d-1} collects the vectors of the "curved" constructions; basis
// d is the computational basis.  Vectors are stored row-major per basis:
// vector a of basis x occupies components [a*d, (a+1)*d).
struct MubFamily {
  Dimension dim;
  double tolerance = 1e-9;
  std::string construction;            // e.g. "eq1", "gf9[1,0,1]", "gr4[1,1,0,1]"
  std::vector<std::vector<cplx>> bases;

  int d() const { return dim.d; }
  int basis_count() const { return dim.d + 1; }
  std::span<const cplx> vector(int x, int a) const;
  BasisVector at(int x, int a) const;
};

// Odd-prime construction: vector a of basis x (x < d) has components
// omega^(x j^2 - a j) / sqrt(d) with omega = exp(2 pi i / d); basis d is
// exactly integral.
MubFamily build_prime_mubs(int d);

// Proper prime powers p^n <= cap, n >= 2.  Odd p: components
// omega_p^tr(a x^2 + b x) over GF(p^n).  p = 2: components i^Tr((a + 2b) x)
// over the Teichmueller set of GR(4, n).  n == 1 is rejected — odd primes
// go through build_prime_mubs, and d = 2 is out of scope.
MubFamily build_prime_power_mubs(int p, int n, int cap = 16);

// Either of the above, dispatched on the factorization of d.
MubFamily build_mubs(int d, int cap = 16);

struct UnbiasednessReport {
  bool pass = false;
  double worst_deviation = 0.0;  // max | |<u|v>|^2 - expected |
  std::string detail;            // empty when pass
};

// Verify orthonormality within each basis and |<u|v>|^2 == 1/d across
// bases, against family tolerance.
UnbiasednessReport check_unbiased(const MubFamily& fam);

struct VectorMatch {
  int basis_index = -1;   // z
  int vector_index = -1;  // c
};

// Find the family vector equal to v up to a global phase (squared-overlap
// within tolerance of 1).  nullopt when nothing matches.
std::optional<VectorMatch> match_vector(std::span<const cplx> v, const MubFamily& fam);

}  // namespace mubclass
