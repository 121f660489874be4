#include "opuc/geronimus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "opuc/chebyshev.hpp"

namespace opuc {

namespace {

constexpr double kRescaleAbove = 0x1p930;

// v_{k+1} = step v_k - damp v_{k-1}, v_0 = 1, v_{-1} = 0. The pair (v_{k-1}, v_k)
// shares one binary exponent and is rescaled once it passes 2^930.
struct ScaledRecurrence {
  cplx step;
  cplx damp;
  cplx prev = 0.0;
  cplx cur = 1.0;
  long exponent = 0;

  void advance() {
    const cplx next = step * cur - damp * prev;
    prev = cur;
    cur = next;
    const double m = std::max(std::abs(cur), std::abs(prev));
    if (m > kRescaleAbove) {
      int e = 0;
      std::frexp(m, &e);
      const double s = std::ldexp(1.0, -e);
      cur *= s;
      prev *= s;
      exponent += e;
    }
  }

  void run(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) advance();
  }
};

ScaledRecurrence monic_recurrence(const GeronimusParams& p, cplx z) { return {z + 1.0, p.rho_sq() * z}; }
ScaledRecurrence orthonormal_recurrence(const GeronimusParams& p, cplx z) { return {(z + 1.0) / p.rho(), z}; }

// Brings two scaled values to the larger exponent.
std::pair<cplx, cplx> align(cplx x, long ex, cplx y, long ey, long& out) {
  out = std::max(ex, ey);
  return {unscaled(x, ex - out), unscaled(y, ey - out)};
}

}  // namespace

GeronimusParams::GeronimusParams(cplx alpha) : alpha_(alpha) {
  const double modulus = std::abs(alpha);
  if (!std::isfinite(modulus) || modulus >= 1.0) throw std::invalid_argument("GeronimusParams: need |alpha| < 1");
  rho_sq_ = 1.0 - std::norm(alpha);
  rho_ = std::sqrt(rho_sq_);
  theta_alpha_ = 2.0 * std::asin(modulus);
}

ExactGeronimusParams::ExactGeronimusParams(GaussianRational alpha)
    : alpha_(std::move(alpha)), rho_sq_(Rational(1) - alpha_.norm()) {
  if (rho_sq_.sign() <= 0) throw std::invalid_argument("ExactGeronimusParams: need |alpha|^2 < 1");
}

std::vector<GaussianRationalPoly> geronimus_y_sequence(const ExactGeronimusParams& params, std::size_t n) {
  const GaussianRationalPoly trace{GaussianRational(1), GaussianRational(1)};
  const auto det = GaussianRationalPoly::monomial(1, GaussianRational(params.rho_sq()));
  return y_sequence(trace, det, n);
}

GaussianRationalPoly geronimus_y(const ExactGeronimusParams& params, std::size_t n) {
  return std::move(geronimus_y_sequence(params, n).back());
}

cplx geronimus_y(const GeronimusParams& params, std::size_t n, cplx z) {
  auto rec = monic_recurrence(params, z);
  rec.run(n);
  return unscaled(rec.cur, rec.exponent);
}

PolyPair<GaussianRationalPoly> geronimus_monic(const ExactGeronimusParams& params, std::size_t n) {
  if (n == 0) return {GaussianRationalPoly(1), GaussianRationalPoly(1), 0, Normalization::Monic, 0};
  const auto y = geronimus_y_sequence(params, n);
  const GaussianRational one(1);
  auto phi = y[n] - (one + params.alpha().conj()) * y[n - 1];
  auto phi_star = y[n] - ((one + params.alpha()) * y[n - 1]).shifted(1);
  return {std::move(phi), std::move(phi_star), static_cast<long>(n), Normalization::Monic, 0};
}

PolyPair<cplx> geronimus_monic(const GeronimusParams& params, std::size_t n, cplx z) {
  auto rec = monic_recurrence(params, z);
  rec.run(n);
  const cplx a = params.alpha();
  return {rec.cur - (1.0 + std::conj(a)) * rec.prev, rec.cur - z * (1.0 + a) * rec.prev, static_cast<long>(n),
          Normalization::Monic, rec.exponent};
}

PolyPair<cplx> geronimus_orthonormal(const GeronimusParams& params, std::size_t n, cplx z) {
  auto rec = orthonormal_recurrence(params, z);
  rec.run(n);
  const cplx a = params.alpha();
  const double r = params.rho();
  return {rec.cur - ((1.0 + std::conj(a)) / r) * rec.prev, rec.cur - (z * (1.0 + a) / r) * rec.prev,
          static_cast<long>(n), Normalization::Orthonormal, rec.exponent};
}

OrthonormalWalker::OrthonormalWalker(const GeronimusParams& params, cplx z)
    : step_((z + 1.0) / params.rho()),
      z_(z),
      phi_coeff_((1.0 + std::conj(params.alpha())) / params.rho()),
      star_coeff_(z * (1.0 + params.alpha()) / params.rho()) {}

void OrthonormalWalker::advance() {
  const cplx next = step_ * y_cur_ - z_ * y_prev_;
  y_prev_ = y_cur_;
  y_cur_ = next;
  ++degree_;
}

WallPair<GaussianRationalPoly> wall_pinter_nevai(const ExactGeronimusParams& params, std::size_t n) {
  const auto seq = params.as_sequence(n + 1);
  const auto phi = szego_iterate(seq, n + 1);
  const auto psi = second_kind_iterate(seq, n + 1);
  const GaussianRational half(Rational(1, 2));
  auto a = ((psi.star - phi.star) * half).divided_by_z_power(1);
  auto b = (psi.star + phi.star) * half;
  return {std::move(a), std::move(b), 0};
}

WallPair<cplx> wall_pinter_nevai(const GeronimusParams& params, std::size_t n, cplx z) {
  if (z == 0.0) throw std::domain_error("wall_pinter_nevai: floating form needs z != 0");
  const auto seq = FloatVerblunsky::constant(params.alpha(), n + 1);
  const auto phi = szego_iterate(seq, n + 1, z);
  const auto psi = second_kind_iterate(seq, n + 1, z);
  long e = 0;
  const auto [psi_star, phi_star] = align(psi.star, psi.exponent, phi.star, phi.exponent, e);
  return {(psi_star - phi_star) / (2.0 * z), (psi_star + phi_star) / 2.0, e};
}

WallPair<GaussianRationalPoly> wall_closed(const ExactGeronimusParams& params, std::size_t n) {
  const auto y = geronimus_y_sequence(params, n + 1);
  return {params.alpha() * y[n], y[n + 1] - y[n].shifted(1), 0};
}

WallPair<cplx> wall_closed(const GeronimusParams& params, std::size_t n, cplx z) {
  auto rec = monic_recurrence(params, z);
  rec.run(n + 1);
  // rec.prev = y_n, rec.cur = y_{n+1}
  return {params.alpha() * rec.prev, rec.cur - z * rec.prev, rec.exponent};
}

namespace {

template <class Real>
std::complex<Real> wall_ratio_impl(const GeronimusParams& params, std::size_t n, std::complex<Real> z) {
  using C = std::complex<Real>;
  const C alpha(params.alpha().real(), params.alpha().imag());
  const Real rho_sq = Real(1) - std::norm(alpha);
  const C step = z + Real(1);
  const C damp = rho_sq * z;
  C prev(0);
  C cur(1);
  for (std::size_t k = 0; k <= n; ++k) {
    const C next = step * cur - damp * prev;
    prev = cur;
    cur = next;
    const Real m = std::max(std::abs(cur), std::abs(prev));
    if (m > Real(kRescaleAbove)) {
      cur /= m;
      prev /= m;
    }
  }
  return alpha * prev / (cur - z * prev);
}

template <class Real>
std::complex<Real> schur_impl(const GeronimusParams& params, std::complex<Real> z) {
  using C = std::complex<Real>;
  if (!(std::abs(z) < Real(1))) throw std::domain_error("schur_function: need |z| < 1");
  const C a(params.alpha().real(), params.alpha().imag());
  if (a == C(0)) return C(0);
  const Real rho_sq = Real(1) - std::norm(a);
  const C s = std::sqrt((z + Real(1)) * (z + Real(1)) - Real(4) * rho_sq * z);
  const C d1 = Real(1) - z + s;
  const C d2 = Real(1) - z - s;
  const Real inf = std::numeric_limits<Real>::infinity();
  const Real m1 = std::abs(d1) > Real(0) ? std::abs(Real(2) * a / d1) : inf;
  const Real m2 = std::abs(d2) > Real(0) ? std::abs(Real(2) * a / d2) : inf;
  const C f = m1 <= m2 ? Real(2) * a / d1 : Real(2) * a / d2;
  if (!(std::abs(f) <= Real(1) + Real(1e-12))) throw std::domain_error("schur_function: no branch maps into the disk");
  return f;
}

}  // namespace

cplx wall_ratio(const GeronimusParams& params, std::size_t n, cplx z) { return wall_ratio_impl<double>(params, n, z); }

std::complex<long double> wall_ratio_extended(const GeronimusParams& params, std::size_t n, std::complex<long double> z) {
  return wall_ratio_impl<long double>(params, n, z);
}

cplx schur_function(const GeronimusParams& params, cplx z) { return schur_impl<double>(params, z); }

std::complex<long double> schur_function_extended(const GeronimusParams& params, std::complex<long double> z) {
  return schur_impl<long double>(params, z);
}

cplx ratio_limit(const GeronimusParams& params, cplx z) {
  if (params.is_real_negative() && std::abs(z - 1.0) < kRatioExcludedRadiusAtOne) {
    throw std::domain_error("ratio_limit: z too close to 1");
  }
  const cplx s = std::sqrt((z + 1.0) * (z + 1.0) - 4.0 * params.rho_sq() * z);
  const double r = params.rho();
  const cplx plus = (z + 1.0 + s) / (2.0 * r);
  const cplx minus = (z + 1.0 - s) / (2.0 * r);
  const bool plus_dominant = std::abs(plus) >= std::abs(minus);
  const cplx dominant = plus_dominant ? plus : minus;
  const cplx other = plus_dominant ? minus : plus;
  if (std::abs(dominant) - std::abs(other) <= 1e-9 * std::abs(dominant)) {
    throw std::domain_error("ratio_limit: z is on the support arc");
  }

  const auto lo = geronimus_orthonormal(params, kRatioValidationDegree, z);
  const auto hi = geronimus_orthonormal(params, kRatioValidationDegree + 1, z);
  if (lo.first == 0.0) throw std::domain_error("ratio_limit: validation hit a zero of phi_n");
  const cplx finite = unscaled(hi.first / lo.first, hi.exponent - lo.exponent);
  if (!(std::abs(finite - dominant) < std::abs(finite - other))) {
    throw std::domain_error("ratio_limit: branch validation failed");
  }
  return dominant;
}

GeneratingFunctionCheck generating_function_check(const GeronimusParams& params, cplx z, cplx t, std::size_t terms) {
  const double r = params.rho();
  const cplx a = params.alpha();
  const cplx denominator = r - t * (z + 1.0) + r * z * t * t;
  if (std::abs(denominator) < 1e-12) throw std::domain_error("generating_function_check: singular closed form");
  const cplx closed = (r - t - t * std::conj(a)) / denominator;

  // Neumaier-compensated sum of phi_n t^n.
  cplx sum = 0.0;
  cplx comp = 0.0;
  cplx power = 1.0;
  OrthonormalWalker walk(params, z);
  for (std::size_t n = 0; n <= terms; ++n) {
    const cplx term = walk.phi() * power;
    const cplx next = sum + term;
    auto fix = [](double s, double x, double nx) { return std::abs(s) >= std::abs(x) ? (s - nx) + x : (x - nx) + s; };
    comp += cplx(fix(sum.real(), term.real(), next.real()), fix(sum.imag(), term.imag(), next.imag()));
    sum = next;
    power *= t;
    walk.advance();
  }
  sum += comp;
  return {sum, closed, std::abs(sum - closed)};
}

GaussianRationalPoly paraorthogonal(const ExactVerblunsky& alphas, std::size_t n, const GaussianRational& beta,
                                    ParaFamily family) {
  if (beta.norm() != Rational(1)) throw std::invalid_argument("paraorthogonal: need |beta| = 1");
  const auto pair = family == ParaFamily::Phi ? szego_iterate(alphas, n) : second_kind_iterate(alphas, n);
  return pair.first.shifted(1) - beta.conj() * pair.star;
}

GaussianRationalPoly paraorthogonal(const ExactGeronimusParams& params, std::size_t n, const GaussianRational& beta,
                                    ParaFamily family) {
  return paraorthogonal(params.as_sequence(n), n, beta, family);
}

cplx paraorthogonal(const GeronimusParams& params, std::size_t n, cplx beta, cplx z, ParaFamily family) {
  if (std::abs(std::abs(beta) - 1.0) > 1e-12) throw std::invalid_argument("paraorthogonal: need |beta| = 1");
  const GeronimusParams p = family == ParaFamily::Phi ? params : GeronimusParams(-params.alpha());
  const auto pair = geronimus_monic(p, n, z);
  return unscaled(z * pair.first - std::conj(beta) * pair.star, pair.exponent);
}

bool geronone_check(const ExactGeronimusParams& params, std::size_t n) {
  if (n == 0) throw std::invalid_argument("geronone_check: need n >= 1");
  const GaussianRational one(1);
  auto para_at_one = [&](const ExactGeronimusParams& p) {
    const auto pair = geronimus_monic(p, n - 1);
    return pair.first.evaluate(one) - pair.star.evaluate(one);
  };
  const ExactGeronimusParams second(-params.alpha());
  return (para_at_one(params) + para_at_one(second)).is_zero();
}

bool pell_check(long n) {
  if (n < 1) throw std::invalid_argument("pell_check: need n >= 1");
  const auto t = cheb_exact_poly(ChebyshevKind::FirstKind_T, n);
  const auto u = cheb_exact_poly(ChebyshevKind::SecondKind_U, n - 1);
  const GaussianRationalPoly x_sq_minus_one{GaussianRational(-1), GaussianRational(0), GaussianRational(1)};
  return t * t - x_sq_minus_one * u * u == GaussianRationalPoly(1);
}

}  // namespace opuc
