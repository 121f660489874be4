#pragma once

#include <cstddef>

#include "opuc/geronimus.hpp"
#include "opuc/types.hpp"

namespace opuc {

struct KernelValue {
  cplx value;
  std::size_t n;
  cplx z;
  cplx w;
};

// K_n(z, w) = sum_{m=0}^{n} phi_m(z) conj(phi_m(w)), Neumaier-compensated.
KernelValue cd_kernel_sum(const GeronimusParams& params, std::size_t n, cplx z, cplx w);

// Christoffel-Darboux closed form
//   (conj(phi*_{n+1}(w)) phi*_{n+1}(z) - conj(phi_{n+1}(w)) phi_{n+1}(z)) / (1 - z conj w).
// Throws std::domain_error when |1 - z conj w| < kCdDiagonalGuard.
inline constexpr double kCdDiagonalGuard = 1e-10;
KernelValue cd_kernel_formula(const GeronimusParams& params, std::size_t n, cplx z, cplx w);

// Kernel of the Chebyshev-U measure (2/pi) sqrt(1 - x^2) dx:
//   (conj(U_n(y)) U_{n+1}(x) - U_n(x) conj(U_{n+1}(y))) / (2 (x - conj y)),
// or sum_{m<=n} U_m(x) conj(U_m(y)) when |x - conj y| < kChebKernelSwitch.
inline constexpr double kChebKernelSwitch = 1e-7;
cplx cheb_kernel(std::size_t n, cplx x, cplx y);
cplx cheb_kernel_sum(std::size_t n, cplx x, cplx y);

struct UniversalityRecord {
  std::size_t n;
  cplx a;
  cplx b;
  cplx empirical;
  cplx limit;
  double abs_error;
};

// Empirical K_n(e^{i(theta - a/n^2)}, e^{i(theta - b/n^2)}) / K_n(e^{i theta}, e^{i theta})
// against J*(alpha a / rho, alpha conj(b) / rho) / J*(0, 0). Requires real alpha
// in (-1, 0); throws std::invalid_argument otherwise.
UniversalityRecord universality_ratio(const GeronimusParams& params, std::size_t n, cplx a, cplx b);

struct EdgeGrowth {
  double scaled;          // K_n(edge, edge) / n^3
  double limit_constant;  // 2 (1 + alpha) alpha^2 / (3 rho^2)
};

EdgeGrowth edge_growth(const GeronimusParams& params, std::size_t n);

// sqrt(1 - alpha^2 - cos^2(theta/2)) / ((1 + alpha) sin(theta/2)) on the open
// arc (theta_alpha, 2 pi - theta_alpha), zero elsewhere. theta is reduced mod 2 pi.
double weight_density(const GeronimusParams& params, double theta);

}  // namespace opuc
