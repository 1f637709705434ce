#include "mubclass/mub_family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mubclass/galois.hpp"

namespace mubclass {

namespace {

std::vector<cplx> roots_of_unity(int d) {
  std::vector<cplx> w(d);
  for (int t = 0; t < d; ++t) {
    double a = 2.0 * std::numbers::pi * t / d;
    w[t] = {std::cos(a), std::sin(a)};
  }
  return w;
}

std::vector<cplx> identity_basis(int d) {
  std::vector<cplx> b(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
  for (int a = 0; a < d; ++a) b[static_cast<std::size_t>(a) * d + a] = cplx{1.0, 0.0};
  return b;
}

std::string modulus_suffix(const std::string& tag, const std::vector<int>& coeffs) {
  std::ostringstream os;
  os << tag << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << "]";
  return os.str();
}

}  // namespace

std::span<const cplx> MubFamily::vector(int x, int a) const {
  if (x < 0 || x > dim.d || a < 0 || a >= dim.d)
    throw std::invalid_argument("basis or vector index out of range");
  return std::span<const cplx>(bases[x]).subspan(static_cast<std::size_t>(a) * dim.d,
                                                 dim.d);
}

BasisVector MubFamily::at(int x, int a) const {
  auto v = vector(x, a);
  return {x, a, std::vector<cplx>(v.begin(), v.end())};
}

MubFamily build_prime_mubs(int d) {
  Dimension dim = Dimension::odd_prime(d);
  MubFamily fam;
  fam.dim = dim;
  fam.construction = "eq1";
  fam.bases.reserve(d + 1);
  const auto w = roots_of_unity(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int x = 0; x < d; ++x) {
    std::vector<cplx> b(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
      for (int j = 0; j < d; ++j) {
        int e = ((x * j * j - a * j) % d + d) % d;
        b[static_cast<std::size_t>(a) * d + j] = w[e] * norm;
      }
    }
    fam.bases.push_back(std::move(b));
  }
  fam.bases.push_back(identity_basis(d));
  return fam;
}

MubFamily build_prime_power_mubs(int p, int n, int cap) {
  Dimension dim = Dimension::prime_power(p, n, cap);
  const int q = dim.d;
  MubFamily fam;
  fam.dim = dim;
  fam.bases.reserve(q + 1);
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));

  if (p == 2) {
    GaloisRing4 ring(n);
    fam.construction = modulus_suffix("gr4", [&] {
      // the F2 modulus is fixed per n; reconstruct its coefficient list
      std::vector<int> f;
      if (n == 2) f = {1, 1, 1};
      if (n == 3) f = {1, 1, 0, 1};
      if (n == 4) f = {1, 1, 0, 0, 1};
      return f;
    }());
    static const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int a = 0; a < q; ++a) {
      std::vector<cplx> b(static_cast<std::size_t>(q) * q);
      for (int bi = 0; bi < q; ++bi)
        for (int x = 0; x < q; ++x)
          b[static_cast<std::size_t>(bi) * q + x] = i_pow[ring.trace_exponent(a, bi, x)] * norm;
      fam.bases.push_back(std::move(b));
    }
  } else {
    GaloisField field(p, n);
    {
      // reconstruct full modulus coefficients for the construction id
      std::vector<int> full;
      if (p == 3 && n == 2) full = {1, 0, 1};
      fam.construction = full.empty() ? ("gf" + std::to_string(q))
                                      : modulus_suffix("gf" + std::to_string(q), full);
    }
    const auto w = roots_of_unity(p);
    for (int a = 0; a < q; ++a) {
      std::vector<cplx> b(static_cast<std::size_t>(q) * q);
      for (int bi = 0; bi < q; ++bi) {
        for (int x = 0; x < q; ++x) {
          int e = field.trace(
              field.add(field.mul(a, field.mul(x, x)), field.mul(bi, x)));
          b[static_cast<std::size_t>(bi) * q + x] = w[e] * norm;
        }
      }
      fam.bases.push_back(std::move(b));
    }
  }
  fam.bases.push_back(identity_basis(q));
  return fam;
}

MubFamily build_mubs(int d, int cap) {
  Dimension dim = Dimension::parse(d, cap);
  return dim.is_odd_prime() ? build_prime_mubs(d)
                            : build_prime_power_mubs(dim.p, dim.n, cap);
}

UnbiasednessReport check_unbiased(const MubFamily& fam) {
  const int d = fam.d();
  UnbiasednessReport report;
  double worst = 0.0;
  std::ostringstream detail;
  bool failed = false;
  const double target = 1.0 / d;
  for (int x = 0; x <= d; ++x) {
    for (int a = 0; a < d; ++a) {
      auto u = fam.vector(x, a);
      for (int y = x; y <= d; ++y) {
        for (int b = (y == x) ? a : 0; b < d; ++b) {
          auto v = fam.vector(y, b);
          cplx ov{0.0, 0.0};
          for (int j = 0; j < d; ++j) ov += std::conj(u[j]) * v[j];
          double dev;
          if (x == y) {
            dev = (a == b) ? std::abs(std::norm(ov) - 1.0) : std::abs(ov);
          } else {
            dev = std::abs(std::norm(ov) - target);
          }
          if (dev > worst) worst = dev;
          if (dev > fam.tolerance && !failed) {
            failed = true;
            detail << "first violation at bases (" << x << "," << y << ") vectors ("
                   << a << "," << b << "), deviation " << dev;
          }
        }
      }
    }
  }
  report.worst_deviation = worst;
  report.pass = !failed;
  if (failed) report.detail = detail.str();
  return report;
}

std::optional<VectorMatch> match_vector(std::span<const cplx> v, const MubFamily& fam) {
  const int d = fam.d();
  if (static_cast<int>(v.size()) != d)
    throw std::invalid_argument("vector length does not match the dimension");
  double norm2 = 0.0;
  for (auto& c : v) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-8)
    throw std::invalid_argument("match_vector requires a unit-norm input");
  for (int z = 0; z <= d; ++z) {
    const auto& basis = fam.bases[z];
    for (int c = 0; c < d; ++c) {
      cplx ov{0.0, 0.0};
      const cplx* row = basis.data() + static_cast<std::size_t>(c) * d;
      for (int j = 0; j < d; ++j) ov += std::conj(row[j]) * v[j];
      if (std::norm(ov) >= 1.0 - fam.tolerance) return VectorMatch{z, c};
    }
  }
  return std::nullopt;
}

}  // namespace mubclass
