#pragma once

#include <cstddef>
#include <vector>

#include "opuc/poly.hpp"
#include "opuc/szego.hpp"
#include "opuc/types.hpp"

namespace opuc {

// Parameter of the constant-coefficient family alpha_n = alpha. The measure
// lives on the arc theta_alpha <= theta <= 2 pi - theta_alpha, possibly with
// one extra mass point.
class GeronimusParams {
 public:
  explicit GeronimusParams(cplx alpha);

  cplx alpha() const { return alpha_; }
  double rho_sq() const { return rho_sq_; }
  double rho() const { return rho_; }
  // 2 arcsin |alpha|, in [0, pi).
  double theta_alpha() const { return theta_alpha_; }
  bool is_real_negative() const { return alpha_.imag() == 0.0 && alpha_.real() < 0.0; }

 private:
  cplx alpha_;
  double rho_sq_;
  double rho_;
  double theta_alpha_;
};

// Exact counterpart. rho itself is irrational in general and is never stored.
class ExactGeronimusParams {
 public:
  explicit ExactGeronimusParams(GaussianRational alpha);

  const GaussianRational& alpha() const { return alpha_; }
  const Rational& rho_sq() const { return rho_sq_; }
  GeronimusParams to_floating() const { return GeronimusParams(alpha_.to_complex()); }
  ExactVerblunsky as_sequence(std::size_t length) const { return ExactVerblunsky::constant(alpha_, length); }

 private:
  GaussianRational alpha_;
  Rational rho_sq_;
};

// y_{k+1} = (z+1) y_k - rho^2 z y_{k-1}, y_0 = 1, y_{-1} = 0.
std::vector<GaussianRationalPoly> geronimus_y_sequence(const ExactGeronimusParams& params, std::size_t n);
GaussianRationalPoly geronimus_y(const ExactGeronimusParams& params, std::size_t n);
cplx geronimus_y(const GeronimusParams& params, std::size_t n, cplx z);

// Phi_n = y_n - (1 + conj alpha) y_{n-1},  Phi_n^* = y_n - z (1 + alpha) y_{n-1}.
PolyPair<GaussianRationalPoly> geronimus_monic(const ExactGeronimusParams& params, std::size_t n);
PolyPair<cplx> geronimus_monic(const GeronimusParams& params, std::size_t n, cplx z);

// phi_n = rho^{-n} Phi_n, evaluated with the rho^{-1} folded into every
// recurrence step. Values past 2^930 are rescaled; see PolyPair::exponent.
PolyPair<cplx> geronimus_orthonormal(const GeronimusParams& params, std::size_t n, cplx z);

// Streams (phi_m(z), phi_m^*(z)) for m = 0, 1, 2, ... without rescaling.
class OrthonormalWalker {
 public:
  OrthonormalWalker(const GeronimusParams& params, cplx z);

  long degree() const { return degree_; }
  cplx phi() const { return y_cur_ - phi_coeff_ * y_prev_; }
  cplx phi_star() const { return y_cur_ - star_coeff_ * y_prev_; }
  void advance();

 private:
  cplx step_;   // (z + 1) / rho
  cplx z_;
  cplx phi_coeff_;
  cplx star_coeff_;
  cplx y_prev_ = 0.0;
  cplx y_cur_ = 1.0;
  long degree_ = 0;
};

template <class T>
struct WallPair {
  T a;
  T b;
  long exponent = 0;  // floating only, as in PolyPair
};

// A_n = (Psi_{n+1}^* - Phi_{n+1}^*) / (2z),  B_n = (Psi_{n+1}^* + Phi_{n+1}^*) / 2,
// built from the Szego recursion. The exact form throws std::domain_error if
// the division by 2z leaves a remainder; the floating form requires z != 0.
WallPair<GaussianRationalPoly> wall_pinter_nevai(const ExactGeronimusParams& params, std::size_t n);
WallPair<cplx> wall_pinter_nevai(const GeronimusParams& params, std::size_t n, cplx z);

// A_n = alpha y_n,  B_n = y_{n+1} - z y_n.
WallPair<GaussianRationalPoly> wall_closed(const ExactGeronimusParams& params, std::size_t n);
WallPair<cplx> wall_closed(const GeronimusParams& params, std::size_t n, cplx z);
// A_n(z) / B_n(z), independent of rescaling. The _extended variant runs
// the same recurrence in extended precision.
cplx wall_ratio(const GeronimusParams& params, std::size_t n, cplx z);
std::complex<long double> wall_ratio_extended(const GeronimusParams& params, std::size_t n, std::complex<long double> z);

// f(z) = 2 alpha / (1 - z + sqrt((z+1)^2 - 4 rho^2 z)) for |z| < 1, on the
// branch with |f| <= 1. Throws std::domain_error for |z| >= 1 or if no branch
// qualifies.
cplx schur_function(const GeronimusParams& params, cplx z);
std::complex<long double> schur_function_extended(const GeronimusParams& params, std::complex<long double> z);

// lim phi_{n+1}(z) / phi_n(z) = (z + 1 + sqrt((z+1)^2 - 4 rho^2 z)) / (2 rho).
// The root of larger modulus is taken and checked against a finite-n ratio.
// Throws std::domain_error on the support, near z = 1 for real alpha in
// (-1, 0), or when the finite-n check disagrees (mass points, alpha = 0
// inside the disk).
cplx ratio_limit(const GeronimusParams& params, cplx z);
inline constexpr std::size_t kRatioValidationDegree = 256;
inline constexpr double kRatioExcludedRadiusAtOne = 1e-3;

struct GeneratingFunctionCheck {
  cplx partial_sum;
  cplx closed_form;
  double error;
};

// Sum_{n=0}^{N} phi_n(z) t^n against (rho - t - t conj alpha) / (rho - t(z+1) + rho z t^2).
// Convergence is the caller's business; |t| |ratio_limit(z)| < 1 suffices.
// Throws std::domain_error if the closed-form denominator is within 1e-12 of 0.
GeneratingFunctionCheck generating_function_check(const GeronimusParams& params, cplx z, cplx t, std::size_t terms);

enum class ParaFamily { Phi, Psi };

// z Phi_n - conj(beta) Phi_n^* (or the same with Psi), degree n+1. Requires
// |beta| = 1: exactly for Gaussian rationals, within 1e-12 for floating.
GaussianRationalPoly paraorthogonal(const ExactVerblunsky& alphas, std::size_t n, const GaussianRational& beta,
                                    ParaFamily family);
GaussianRationalPoly paraorthogonal(const ExactGeronimusParams& params, std::size_t n, const GaussianRational& beta,
                                    ParaFamily family);
cplx paraorthogonal(const GeronimusParams& params, std::size_t n, cplx beta, cplx z, ParaFamily family);

// Phi_n^{(1)}(1) + Psi_n^{(1)}(1) == 0 exactly, n >= 1. Both terms come from
// the closed forms (with alpha and -alpha respectively).
bool geronone_check(const ExactGeronimusParams& params, std::size_t n);

// T_n^2 - (x^2 - 1) U_{n-1}^2 == 1 as integer polynomials, n >= 1.
bool pell_check(long n);

}  // namespace opuc
