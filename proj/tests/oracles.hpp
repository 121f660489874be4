#pragma once

// Test-only reference implementations. Each one takes a different route from
// the library code it is compared against.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "opuc/poly.hpp"
#include "opuc/szego.hpp"
#include "opuc/types.hpp"

namespace opuc::oracle {

inline GaussianRationalPoly from_integer(const mpz_class& v, const GaussianRationalPoly*) {
  return GaussianRationalPoly(GaussianRational(Rational(v, mpz_class(1))));
}
inline GaussianRational from_integer(const mpz_class& v, const GaussianRational*) {
  return GaussianRational(Rational(v, mpz_class(1)));
}
inline cplx from_integer(const mpz_class& v, const cplx*) { return v.get_d(); }

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

template <class T>
T power(const T& x, std::size_t k) {
  T out(1);
  for (std::size_t j = 0; j < k; ++j) out = out * x;
  return out;
}

// y_n = sum_{m <= n/2} C(n-m, m) R^{n-2m} (-D)^m
template <class T>
T y_binomial_sum(const T& trace, const T& det, std::size_t n) {
  T sum(0);
  const T minus_det = T(0) - det;
  for (std::size_t m = 0; 2 * m <= n; ++m) {
    const T c = from_integer(binomial(n - m, m), static_cast<const T*>(nullptr));
    sum = sum + c * power(trace, n - 2 * m) * power(minus_det, m);
  }
  return sum;
}

// U_n(x) = sum_j (-1)^j C(n-j, j) (2x)^{n-2j}, as an exact polynomial in x.
inline GaussianRationalPoly cheb_U_binomial(std::size_t n) {
  GaussianRationalPoly out;
  for (std::size_t j = 0; 2 * j <= n; ++j) {
    mpz_class c = binomial(n - j, j);
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 2 * j);
    c *= two_pow;
    if (j % 2) c = -c;
    out += GaussianRationalPoly::monomial(n - 2 * j, GaussianRational(Rational(c, mpz_class(1))));
  }
  return out;
}

template <class T>
Matrix2<T> repeated_power(const Matrix2<T>& m, std::size_t n) {
  auto out = Matrix2<T>::identity();
  for (std::size_t k = 0; k < n; ++k) out = out * m;
  return out;
}

// Gamma(k + nu + 1) for nu in {-1/2, 1/2, 3/2}, from Gamma(1/2) = sqrt(pi).
inline double gamma_half_shift(int k, double nu) {
  double x = 0.5;
  double g = std::sqrt(std::numbers::pi);
  const double target = k + nu + 1.0;
  while (x + 0.5 < target + 0.25) {
    g *= x;
    x += 1.0;
  }
  return g;
}

// J_nu(s) and s J_nu'(s) from the ascending series, with (s/2)^nu taken as
// sqrt(s/2)^{2 nu} on the principal branch.
struct BesselSeries {
  cplx value;
  cplx s_derivative;
};

inline BesselSeries bessel_series(double nu, cplx s, int terms = 60) {
  const cplx half = s / 2.0;
  const cplx base = std::pow(std::sqrt(half), 2.0 * nu);
  cplx value = 0.0;
  cplx deriv = 0.0;
  cplx h2k = 1.0;
  double factorial = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      factorial *= k;
      h2k *= -half * half;
    }
    const cplx term = h2k / (factorial * gamma_half_shift(k, nu));
    value += term;
    deriv += (2.0 * k + nu) * term;
  }
  return {base * value, base * deriv};
}

// Raw Bessel form of the kernel, off the diagonal:
// (J(p) q J'(q) - J(q) p J'(p)) / (2 a^{1/4} b^{1/4} (a - b)), p = sqrt a, q = sqrt b,
// with a^{1/4} = sqrt(p) so the branch matches the series' sqrt(p/2).
inline cplx jstar_bessel(cplx a, cplx b) {
  const cplx p = std::sqrt(a);
  const cplx q = std::sqrt(b);
  const auto jp = bessel_series(0.5, p);
  const auto jq = bessel_series(0.5, q);
  return (jp.value * jq.s_derivative - jq.value * jp.s_derivative) / (2.0 * std::sqrt(p) * std::sqrt(q) * (a - b));
}

// Simultaneous iteration for all roots of a monic-normalized polynomial.
inline std::vector<cplx> durand_kerner(std::vector<cplx> coeffs) {
  const cplx lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  const std::size_t deg = coeffs.size() - 1;
  std::vector<cplx> roots(deg);
  for (std::size_t k = 0; k < deg; ++k) roots[k] = std::pow(cplx(0.4, 0.9), static_cast<double>(k));
  auto eval = [&](cplx x) {
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      cplx denom = 1.0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const cplx step = eval(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return roots;
}

inline std::vector<cplx> to_complex(const GaussianRationalPoly& p) {
  std::vector<cplx> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

}  // namespace opuc::oracle
