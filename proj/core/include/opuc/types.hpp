#pragma once

#include <cmath>
#include <complex>

namespace opuc {

using cplx = std::complex<double>;

enum class Normalization { Monic, Orthonormal };

// (Phi_n, Phi_n^*) or (phi_n, phi_n^*): exact polynomials or point values.
// Floating pairs may carry a binary exponent when the overflow guard kicked
// in; the represented values are first * 2^exponent and star * 2^exponent.
template <class T>
struct PolyPair {
  T first;
  T star;
  long degree = 0;
  Normalization normalization = Normalization::Monic;
  long exponent = 0;
};

inline cplx unscaled(cplx mantissa, long exponent) {
  return exponent == 0 ? mantissa : cplx(std::ldexp(mantissa.real(), static_cast<int>(exponent)),
                                         std::ldexp(mantissa.imag(), static_cast<int>(exponent)));
}

}  // namespace opuc
