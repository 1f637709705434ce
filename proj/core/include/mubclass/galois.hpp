#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mubclass {

// GF(p^n) for odd p, with a fixed irreducible modulus per supported field.
// Elements are labelled 0..q-1 by their base-p digit vectors (label =
// sum c_i p^i for the coefficient of x^i), so label arithmetic is table
// lookup after construction.
class GaloisField {
 public:
  GaloisField(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }
  const std::string& modulus_name() const { return modulus_name_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  // Absolute trace to F_p, returned as an integer in [0, p).
  int trace(int a) const { return trace_[a]; }

 private:
  int p_, n_, q_;
  std::string modulus_name_;
  std::vector<int> add_, mul_, trace_;
};

// The Galois ring GR(4, n) = Z4[x] / (h) with h the Hensel lift of the
// GF(2^n) modulus f (h(x^2) = (-1)^n f(x) f(-x) mod 4).  Exposes exactly
// what the even-characteristic construction needs: the Teichmueller set
// T = {0, 1, xi, ..., xi^(2^n-2)} indexed by GF(2^n) labels, and the
// generalized trace Tr(y) = sum of the n Frobenius images of y, where
// Frobenius acts as xi -> xi^2 on Teichmueller coordinates.
class GaloisRing4 {
 public:
  explicit GaloisRing4(int n);

  int n() const { return n_; }
  int q() const { return q_; }
  const std::string& modulus_name() const { return modulus_name_; }

  // Tr((t_a + 2 t_b) * t_x) in Z4, all three indices Teichmueller labels
  // (i.e. labels of GF(2^n) elements; label 0 is the ring zero).
  int trace_exponent(int a, int b, int x) const {
    return trace_exp_[(a * q_ + b) * q_ + x];
  }

 private:
  int n_, q_;
  std::string modulus_name_;
  std::vector<int> trace_exp_;
};

}  // namespace mubclass
