#pragma once

#include <vector>

#include "opuc/poly.hpp"
#include "opuc/types.hpp"

namespace opuc {

enum class ChebyshevKind { FirstKind_T, SecondKind_U };

// U_n(x) by the three-term recurrence; n >= -1 with U_{-1} = 0.
cplx cheb_U(long n, cplx x);
// U_0(x)..U_n(x).
std::vector<cplx> cheb_U_sequence(long n, cplx x);

// ((x + s)^{n+1} - (x - s)^{n+1}) / (2 s), s = sqrt(x^2 - 1) on the principal
// branch. Throws std::domain_error when |x^2 - 1| < kChebClosedGuard.
inline constexpr double kChebClosedGuard = 1e-8;
cplx cheb_U_closed(long n, cplx x);

// T_n = U_n - x U_{n-1}.
cplx cheb_T(long n, cplx x);

// Integer-coefficient polynomial in x (the poly variable is reused as x).
GaussianRationalPoly cheb_exact_poly(ChebyshevKind kind, long n);

}  // namespace opuc
