#include "opuc/chebyshev.hpp"

#include <stdexcept>

namespace opuc {

namespace {

cplx integer_power(cplx base, long e) {
  cplx result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

cplx cheb_U(long n, cplx x) {
  if (n < -1) throw std::invalid_argument("cheb_U: n must be >= -1");
  if (n == -1) return 0.0;
  cplx prev = 0.0;
  cplx cur = 1.0;
  for (long k = 0; k < n; ++k) {
    const cplx next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<cplx> cheb_U_sequence(long n, cplx x) {
  if (n < 0) return {};
  std::vector<cplx> u(static_cast<std::size_t>(n) + 1);
  u[0] = 1.0;
  if (n >= 1) u[1] = 2.0 * x;
  for (std::size_t k = 2; k < u.size(); ++k) u[k] = 2.0 * x * u[k - 1] - u[k - 2];
  return u;
}

cplx cheb_U_closed(long n, cplx x) {
  if (n < 0) throw std::invalid_argument("cheb_U_closed: n must be >= 0");
  const cplx disc = x * x - 1.0;
  if (std::abs(disc) < kChebClosedGuard) {
    throw std::domain_error("cheb_U_closed: too close to x = +-1, use the recurrence");
  }
  const cplx s = std::sqrt(disc);
  return (integer_power(x + s, n + 1) - integer_power(x - s, n + 1)) / (2.0 * s);
}

cplx cheb_T(long n, cplx x) {
  if (n < 0) throw std::invalid_argument("cheb_T: n must be >= 0");
  return cheb_U(n, x) - x * cheb_U(n - 1, x);
}

GaussianRationalPoly cheb_exact_poly(ChebyshevKind kind, long n) {
  if (n < 0) throw std::invalid_argument("cheb_exact_poly: n must be >= 0");
  const auto two_x = GaussianRationalPoly::monomial(1, GaussianRational(2));
  GaussianRationalPoly prev;  // U_{-1}
  GaussianRationalPoly cur(1);
  for (long k = 0; k < n; ++k) {
    auto next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (kind == ChebyshevKind::SecondKind_U) return cur;
  return cur - prev.shifted(1);
}

}  // namespace opuc
