#include "opuc/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace opuc {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(sqrt a)/sqrt a = sum (-a)^k / (2k+1)!
cplx sinc_sqrt(cplx a) {
  if (std::abs(a) < 1e-3) return 1.0 - a / 6.0 + a * a / 120.0 - a * a * a / 5040.0;
  const cplx p = std::sqrt(a);
  return std::sin(p) / p;
}

cplx cos_sqrt(cplx a) { return std::cos(std::sqrt(a)); }

cplx sinc(cplx x) {
  if (std::abs(x) < 1e-3) {
    const cplx x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// (2/pi) sum_{k>=1} (-1)^{k+1} h_k / (2k+1)! with h_0 = 0, h_1 = 1,
// h_{k+1} = 2(a+b) h_k - (a-b)^2 h_{k-1}.
cplx two_point_series(cplx a, cplx b) {
  const cplx sigma = 2.0 * (a + b);
  const cplx gap_sq = (a - b) * (a - b);
  cplx h_prev = 0.0;
  cplx h = 1.0;
  double factorial = 6.0;
  double sign = 1.0;
  cplx sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    const cplx term = sign * h / factorial;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    const cplx next = sigma * h - gap_sq * h_prev;
    h_prev = h;
    h = next;
    factorial *= static_cast<double>(2 * k + 2) * static_cast<double>(2 * k + 3);
    sign = -sign;
  }
  return 2.0 * sum / kPi;
}

// (1 - sin(2p)/(2p)) / (2 pi p^2) as a power series in a = p^2:
// (1/(2 pi)) sum_{k>=1} (-1)^{k+1} 4^k a^{k-1} / (2k+1)!
cplx diagonal_series(cplx a) {
  cplx sum = 0.0;
  cplx term = 4.0 / 6.0;  // k = 1
  for (int k = 1; k < 40; ++k) {
    sum += term;
    term *= -4.0 * a / (static_cast<double>(2 * k + 2) * static_cast<double>(2 * k + 3));
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum / (2.0 * kPi);
}

cplx diagonal(cplx a) {
  if (std::abs(a) < kJstarDiagonalSeriesRadius) return diagonal_series(a);
  const cplx p = std::sqrt(a);
  return (1.0 - std::sin(2.0 * p) / (2.0 * p)) / (2.0 * kPi * a);
}

}  // namespace

cplx bessel_half(HalfOrder order, cplx zz) {
  if (zz == 0.0) throw std::domain_error("bessel_half: argument must be nonzero");
  const cplx root = std::sqrt(kPi * zz);
  const double s2 = std::numbers::sqrt2;
  switch (order) {
    case HalfOrder::Half:
      return s2 * std::sin(zz) / root;
    case HalfOrder::MinusHalf:
      return s2 * std::cos(zz) / root;
    case HalfOrder::ThreeHalves:
      return s2 * (std::sin(zz) - zz * std::cos(zz)) / (root * zz);
  }
  throw std::invalid_argument("bessel_half: unknown order");
}

cplx jstar(cplx a, cplx b) {
  if (std::abs(a - b) < kJstarDiagonalSwitch) return diagonal(0.5 * (a + b));
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale < kJstarDiagonalSeriesRadius) return two_point_series(a, b);
  if (std::abs(a - b) < 0.5 * scale) {
    // Same kernel as (sinc(p - q) - sinc(p + q)) / (2 pi p q), free of the 1/(a - b).
    const cplx p = std::sqrt(a);
    const cplx q = std::sqrt(b);
    return (sinc(p - q) - sinc(p + q)) / (2.0 * kPi * p * q);
  }
  return (sinc_sqrt(a) * cos_sqrt(b) - sinc_sqrt(b) * cos_sqrt(a)) / (kPi * (a - b));
}

JzReport jz_scan(const std::vector<cplx>& t_grid, const std::vector<std::pair<double, double>>& xy_grid) {
  JzReport report{std::numeric_limits<double>::infinity(), 0.0, t_grid.size(),
                  std::numeric_limits<double>::infinity(), true};
  for (const cplx t : t_grid) {
    const double m = std::abs(jstar(t, std::conj(t)));
    if (m < report.min_modulus) {
      report.min_modulus = m;
      report.argmin = t;
    }
  }
  for (const auto& [x, y] : xy_grid) {
    const double v = (x * std::sinh(y) - y * std::sin(x)) / (x * x + y * y);
    report.sinh_margin_min = std::min(report.sinh_margin_min, v);
    if (!(v > 0.0)) report.sinh_margin_positive = false;
  }
  return report;
}

std::vector<cplx> square_grid_in_disk(double half_width, std::size_t per_side) {
  std::vector<cplx> out;
  if (per_side < 2) return out;
  const double h = 2.0 * half_width / static_cast<double>(per_side - 1);
  for (std::size_t i = 0; i < per_side; ++i) {
    for (std::size_t j = 0; j < per_side; ++j) {
      const cplx t(-half_width + h * static_cast<double>(i), -half_width + h * static_cast<double>(j));
      if (std::abs(t) <= half_width) out.push_back(t);
    }
  }
  return out;
}

}  // namespace opuc
