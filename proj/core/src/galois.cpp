#include "mubclass/galois.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace mubclass {

namespace {

using Poly = std::vector<int>;  // coefficients ascending, length n

// Fixed irreducible moduli (full ascending coefficient lists, monic).
const std::map<std::pair<int, int>, Poly>& modulus_table() {
  static const std::map<std::pair<int, int>, Poly> t = {
      {{2, 2}, {1, 1, 1}},        // x^2+x+1
      {{2, 3}, {1, 1, 0, 1}},     // x^3+x+1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4+x+1
      {{3, 2}, {1, 0, 1}},        // x^2+1
  };
  return t;
}

std::string poly_name(const Poly& full, int modulo) {
  std::string s;
  for (int i = static_cast<int>(full.size()) - 1; i >= 0; --i) {
    int c = ((full[i] % modulo) + modulo) % modulo;
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

// Multiply two length-n coefficient vectors modulo (x^n + mod_tail) over
// Z_m, where x^n == -mod_tail.
Poly poly_mul(const Poly& a, const Poly& b, const Poly& mod_tail, int n, int m) {
  Poly prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
  }
  for (int i = 2 * n - 2; i >= n; --i) {
    int c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (int j = 0; j < n; ++j)
      prod[i - n + j] = ((prod[i - n + j] - c * mod_tail[j]) % m + m) % m;
  }
  prod.resize(n);
  return prod;
}

Poly poly_add(const Poly& a, const Poly& b, int m) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % m;
  return r;
}

Poly poly_pow(Poly a, long long e, const Poly& mod_tail, int n, int m) {
  Poly r(n, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mul(r, a, mod_tail, n, m);
    a = poly_mul(a, a, mod_tail, n, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

GaloisField::GaloisField(int p, int n) : p_(p), n_(n) {
  if (p < 2 || n < 1) throw std::invalid_argument("bad field parameters");
  q_ = 1;
  for (int i = 0; i < n; ++i) q_ *= p;

  Poly full;
  if (n == 1) {
    full = {0, 1};  // modulus x: plain F_p
  } else {
    auto it = modulus_table().find({p, n});
    if (it == modulus_table().end())
      throw std::invalid_argument("no fixed modulus configured for GF(" +
                                  std::to_string(p) + "^" + std::to_string(n) + ")");
    full = it->second;
  }
  modulus_name_ = poly_name(full, p);
  Poly tail(full.begin(), full.begin() + n);  // x^n == -tail

  auto from_label = [&](int lbl) {
    Poly c(n);
    for (int i = 0; i < n; ++i) {
      c[i] = lbl % p;
      lbl /= p;
    }
    return c;
  };
  auto label_of = [&](const Poly& e) {
    int l = 0;
    for (int i = n - 1; i >= 0; --i) l = l * p + e[i];
    return l;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  trace_.resize(q_);
  std::vector<Poly> els(q_);
  for (int l = 0; l < q_; ++l) els[l] = from_label(l);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      add_[a * q_ + b] = label_of(poly_add(els[a], els[b], p));
      mul_[a * q_ + b] = label_of(poly_mul(els[a], els[b], tail, n, p));
    }
  }
  for (int a = 0; a < q_; ++a) {
    Poly t(n, 0);
    Poly x = els[a];
    for (int i = 0; i < n; ++i) {
      t = poly_add(t, x, p);
      x = poly_pow(x, p, tail, n, p);
    }
    for (int i = 1; i < n; ++i)
      if (t[i] != 0) throw std::logic_error("trace left the prime subfield");
    trace_[a] = t[0];
  }
}

GaloisRing4::GaloisRing4(int n) : n_(n) {
  if (n < 2 || n > 4) throw std::invalid_argument("GR(4,n) supported for n in 2..4");
  q_ = 1 << n;

  const Poly f = modulus_table().at({2, n});

  // Graeffe lift to Z4: h(x^2) = (-1)^n f(x) f(-x).
  Poly fneg(n + 1);
  for (int i = 0; i <= n; ++i) fneg[i] = ((f[i] * ((i % 2) ? -1 : 1)) % 4 + 4) % 4;
  Poly prod(2 * n + 1, 0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) prod[i + j] = (prod[i + j] + f[i] * fneg[j]) % 4;
  Poly h(n + 1);
  for (int i = 0; i <= 2 * n; ++i) {
    if (i % 2) {
      if (prod[i] != 0) throw std::logic_error("Graeffe lift has odd coefficients");
    } else {
      h[i / 2] = ((prod[i] * ((n % 2) ? -1 : 1)) % 4 + 4) % 4;
    }
  }
  if (h[n] != 1) throw std::logic_error("Graeffe lift is not monic");
  modulus_name_ = poly_name(h, 4);
  Poly tail(h.begin(), h.begin() + n);  // x^n == -tail over Z4

  // Teichmueller set: 0 and the powers of xi = x, which must have order
  // 2^n - 1; indexed by the mod-2 reduction label of the coefficients.
  Poly zero(n, 0), one(n, 0), xi(n, 0);
  one[0] = 1;
  xi[1] = 1;
  std::vector<Poly> teich(q_);
  std::vector<bool> seen(q_, false);
  auto label2 = [&](const Poly& e) {
    int l = 0;
    for (int i = 0; i < n; ++i) l |= (e[i] & 1) << i;
    return l;
  };
  teich[0] = zero;
  seen[0] = true;
  Poly t = one;
  for (int j = 0; j < q_ - 1; ++j) {
    int l = label2(t);
    if (seen[l]) throw std::logic_error("Teichmueller labels collide");
    seen[l] = true;
    teich[l] = t;
    t = poly_mul(t, xi, tail, n, 4);
  }
  if (t != one) throw std::logic_error("xi does not have order 2^n - 1");

  // Frobenius xi -> xi^2 extended coefficient-wise, then the trace table.
  Poly xi2 = poly_mul(xi, xi, tail, n, 4);
  auto frob = [&](const Poly& a) {
    Poly r(n, 0), pw = one;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r[j] = (r[j] + a[i] * pw[j]) % 4;
      pw = poly_mul(pw, xi2, tail, n, 4);
    }
    return r;
  };
  auto trace = [&](const Poly& a) {
    Poly acc(n, 0), x = a;
    for (int i = 0; i < n; ++i) {
      acc = poly_add(acc, x, 4);
      x = frob(x);
    }
    for (int i = 1; i < n; ++i)
      if (acc[i] != 0) throw std::logic_error("ring trace left Z4");
    return acc[0];
  };

  trace_exp_.resize(static_cast<std::size_t>(q_) * q_ * q_);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      Poly ab(n);
      for (int i = 0; i < n; ++i) ab[i] = (teich[a][i] + 2 * teich[b][i]) % 4;
      for (int x = 0; x < q_; ++x) {
        trace_exp_[(a * q_ + b) * q_ + x] = trace(poly_mul(ab, teich[x], tail, n, 4));
      }
    }
  }
}

}  // namespace mubclass
