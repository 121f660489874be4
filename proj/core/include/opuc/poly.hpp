#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "opuc/gaussian_rational.hpp"

namespace opuc {

// Dense univariate polynomial over Q(i), coefficients in ascending degree.
// The zero polynomial has no stored coefficients; otherwise the last stored
// coefficient is nonzero.
class GaussianRationalPoly {
 public:
  GaussianRationalPoly() = default;
  GaussianRationalPoly(GaussianRational constant);  // NOLINT(google-explicit-constructor)
  GaussianRationalPoly(long constant) : GaussianRationalPoly(GaussianRational(constant)) {}  // NOLINT
  explicit GaussianRationalPoly(std::vector<GaussianRational> coeffs);
  GaussianRationalPoly(std::initializer_list<GaussianRational> coeffs)
      : GaussianRationalPoly(std::vector<GaussianRational>(coeffs)) {}

  // The monomial c*z^k.
  static GaussianRationalPoly monomial(std::size_t k, GaussianRational c = GaussianRational(1));
  static GaussianRationalPoly z() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  // Coefficient of z^k; zero past the degree.
  GaussianRational coeff(std::size_t k) const;
  GaussianRational leading() const { return is_zero() ? GaussianRational() : coeffs_.back(); }

  GaussianRational operator()(const GaussianRational& z) const { return evaluate(z); }
  GaussianRational evaluate(const GaussianRational& z) const;

  // Multiplies by z^k.
  GaussianRationalPoly shifted(std::size_t k) const;
  // Exact division by z^k; throws std::domain_error if a low coefficient is nonzero.
  GaussianRationalPoly divided_by_z_power(std::size_t k) const;
  GaussianRationalPoly conj_coeffs() const;
  std::string to_string() const;

  GaussianRationalPoly operator-() const;
  GaussianRationalPoly& operator+=(const GaussianRationalPoly& o);
  GaussianRationalPoly& operator-=(const GaussianRationalPoly& o);
  GaussianRationalPoly& operator*=(const GaussianRationalPoly& o);
  GaussianRationalPoly& operator*=(const GaussianRational& c);
  GaussianRationalPoly& operator/=(const GaussianRational& c);

  friend GaussianRationalPoly operator+(GaussianRationalPoly a, const GaussianRationalPoly& b) { return a += b; }
  friend GaussianRationalPoly operator-(GaussianRationalPoly a, const GaussianRationalPoly& b) { return a -= b; }
  friend GaussianRationalPoly operator*(const GaussianRationalPoly& a, const GaussianRationalPoly& b);
  friend GaussianRationalPoly operator*(GaussianRationalPoly a, const GaussianRational& c) { return a *= c; }
  friend GaussianRationalPoly operator*(const GaussianRational& c, GaussianRationalPoly a) { return a *= c; }
  friend GaussianRationalPoly operator/(GaussianRationalPoly a, const GaussianRational& c) { return a /= c; }
  friend bool operator==(const GaussianRationalPoly& a, const GaussianRationalPoly& b) = default;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

// p*(z) = z^n conj(p(1/conj z)): coefficient k of the result is conj(coefficient
// n-k of p). Requires deg p <= n; throws std::invalid_argument otherwise.
GaussianRationalPoly star(const GaussianRationalPoly& p, long n);

}  // namespace opuc
