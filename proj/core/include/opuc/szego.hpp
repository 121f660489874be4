#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "opuc/poly.hpp"
#include "opuc/types.hpp"

namespace opuc {

// Finite list of Verblunsky coefficients, each strictly inside the unit disk.
// Scalar is GaussianRational (checked exactly via |a|^2 < 1) or cplx.
template <class Scalar>
class VerblunskySequence {
 public:
  VerblunskySequence() = default;
  explicit VerblunskySequence(std::vector<Scalar> alphas);

  static VerblunskySequence constant(const Scalar& alpha, std::size_t length) {
    return VerblunskySequence(std::vector<Scalar>(length, alpha));
  }

  std::size_t size() const { return alphas_.size(); }
  const Scalar& operator[](std::size_t j) const { return alphas_[j]; }
  const std::vector<Scalar>& values() const { return alphas_; }
  VerblunskySequence negated() const;

 private:
  std::vector<Scalar> alphas_;
};

using ExactVerblunsky = VerblunskySequence<GaussianRational>;
using FloatVerblunsky = VerblunskySequence<cplx>;

// Monic (Phi_n, Phi_n^*) from the Szego recursion with Phi_0 = Phi_0^* = 1.
// Throws std::out_of_range if n exceeds the number of coefficients.
PolyPair<GaussianRationalPoly> szego_iterate(const ExactVerblunsky& alphas, std::size_t n);
// All pairs for degrees 0..n.
std::vector<PolyPair<GaussianRationalPoly>> szego_sequence(const ExactVerblunsky& alphas, std::size_t n);
// Pointwise recursion; the exponent field absorbs overflow past 2^930.
PolyPair<cplx> szego_iterate(const FloatVerblunsky& alphas, std::size_t n, cplx z);

// Second-kind polynomials: the recursion run with the negated coefficients.
PolyPair<GaussianRationalPoly> second_kind_iterate(const ExactVerblunsky& alphas, std::size_t n);
std::vector<PolyPair<GaussianRationalPoly>> second_kind_sequence(const ExactVerblunsky& alphas, std::size_t n);
PolyPair<cplx> second_kind_iterate(const FloatVerblunsky& alphas, std::size_t n, cplx z);

// Psi_n^* Phi_n + Phi_n^* Psi_n == 2 z^n prod_{j<n} (1 - |alpha_j|^2), exactly.
bool wronskian_identity_check(const ExactVerblunsky& alphas, std::size_t n);

template <class T>
struct Matrix2 {
  T a, b, c, d;

  static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }
  T trace() const { return a + d; }
  T determinant() const { return a * d - b * c; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2& x, const Matrix2& y) = default;
};

// [[z, -conj(alpha)], [-alpha z, 1]]
Matrix2<GaussianRationalPoly> transfer_matrix(const GaussianRational& alpha);

// y_0..y_n of y_{k+1} = R y_k - D y_{k-1}, y_0 = 1, y_{-1} = 0.
template <class T>
std::vector<T> y_sequence(const T& trace, const T& det, std::size_t n) {
  std::vector<T> y;
  y.reserve(n + 1);
  y.push_back(T(1));
  if (n == 0) return y;
  y.push_back(trace);
  for (std::size_t k = 1; k < n; ++k) y.push_back(trace * y[k] - det * y[k - 1]);
  return y;
}

// A^n = [[y_n - d y_{n-1}, b y_{n-1}], [c y_{n-1}, y_n - a y_{n-1}]] with
// y built from the trace and determinant of A.
template <class T>
Matrix2<T> mclaughlin_power(const Matrix2<T>& m, std::size_t n) {
  if (n == 0) return Matrix2<T>::identity();
  const auto y = y_sequence(m.trace(), m.determinant(), n);
  const T& yn = y[n];
  const T& ym = y[n - 1];
  return {yn - m.d * ym, m.b * ym, m.c * ym, yn - m.a * ym};
}

}  // namespace opuc
