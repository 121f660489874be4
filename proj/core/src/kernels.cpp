#include "opuc/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuc/bessel.hpp"
#include "opuc/chebyshev.hpp"

namespace opuc {

namespace {

// Neumaier summation, componentwise.
class CompensatedSum {
 public:
  void add(cplx x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  struct Real {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
      const double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    double value() const { return sum + comp; }
  };
  Real re_;
  Real im_;
};

void require_negative_real(const GeronimusParams& params, const char* who) {
  if (!params.is_real_negative()) throw std::invalid_argument(std::string(who) + ": need real alpha in (-1, 0)");
}

cplx edge_point(const GeronimusParams& params, std::size_t n, cplx shift) {
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  return std::exp(cplx(0.0, 1.0) * (params.theta_alpha() - shift / nn));
}

}  // namespace

KernelValue cd_kernel_sum(const GeronimusParams& params, std::size_t n, cplx z, cplx w) {
  OrthonormalWalker at_z(params, z);
  OrthonormalWalker at_w(params, w);
  CompensatedSum sum;
  for (std::size_t m = 0; m <= n; ++m) {
    sum.add(at_z.phi() * std::conj(at_w.phi()));
    at_z.advance();
    at_w.advance();
  }
  return {sum.value(), n, z, w};
}

KernelValue cd_kernel_formula(const GeronimusParams& params, std::size_t n, cplx z, cplx w) {
  const cplx denom = 1.0 - z * std::conj(w);
  if (std::abs(denom) < kCdDiagonalGuard) throw std::domain_error("cd_kernel_formula: z conj(w) too close to 1");
  const auto pz = geronimus_orthonormal(params, n + 1, z);
  const auto pw = geronimus_orthonormal(params, n + 1, w);
  const cplx num = std::conj(pw.star) * pz.star - std::conj(pw.first) * pz.first;
  return {unscaled(num / denom, pz.exponent + pw.exponent), n, z, w};
}

cplx cheb_kernel_sum(std::size_t n, cplx x, cplx y) {
  const auto ux = cheb_U_sequence(static_cast<long>(n), x);
  const auto uy = cheb_U_sequence(static_cast<long>(n), y);
  CompensatedSum sum;
  for (std::size_t m = 0; m <= n; ++m) sum.add(ux[m] * std::conj(uy[m]));
  return sum.value();
}

cplx cheb_kernel(std::size_t n, cplx x, cplx y) {
  const cplx gap = x - std::conj(y);
  if (std::abs(gap) < kChebKernelSwitch) return cheb_kernel_sum(n, x, y);
  const long k = static_cast<long>(n);
  const cplx un_x = cheb_U(k, x);
  const cplx un1_x = cheb_U(k + 1, x);
  const cplx un_y = cheb_U(k, y);
  const cplx un1_y = cheb_U(k + 1, y);
  return (std::conj(un_y) * un1_x - un_x * std::conj(un1_y)) / (2.0 * gap);
}

UniversalityRecord universality_ratio(const GeronimusParams& params, std::size_t n, cplx a, cplx b) {
  require_negative_real(params, "universality_ratio");
  if (n == 0) throw std::invalid_argument("universality_ratio: need n >= 1");
  const cplx edge = edge_point(params, n, 0.0);
  const cplx at_edge = cd_kernel_sum(params, n, edge, edge).value;
  const cplx shifted = cd_kernel_sum(params, n, edge_point(params, n, a), edge_point(params, n, b)).value;
  const cplx empirical = shifted / at_edge;

  const double scale = params.alpha().real() / params.rho();
  const cplx limit = jstar(scale * a, scale * std::conj(b)) / jstar(0.0, 0.0);
  return {n, a, b, empirical, limit, std::abs(empirical - limit)};
}

EdgeGrowth edge_growth(const GeronimusParams& params, std::size_t n) {
  require_negative_real(params, "edge_growth");
  if (n == 0) throw std::invalid_argument("edge_growth: need n >= 1");
  const cplx edge = edge_point(params, n, 0.0);
  const double k = cd_kernel_sum(params, n, edge, edge).value.real();
  const double nd = static_cast<double>(n);
  const double a = params.alpha().real();
  return {k / (nd * nd * nd), 2.0 * (1.0 + a) * a * a / (3.0 * params.rho_sq())};
}

double weight_density(const GeronimusParams& params, double theta) {
  require_negative_real(params, "weight_density");
  const double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) theta += two_pi;
  const double edge = params.theta_alpha();
  if (!(theta > edge && theta < two_pi - edge)) return 0.0;
  const double a = params.alpha().real();
  const double c = std::cos(theta / 2.0);
  const double inner = 1.0 - a * a - c * c;
  return std::sqrt(std::max(inner, 0.0)) / ((1.0 + a) * std::sin(theta / 2.0));
}

}  // namespace opuc
