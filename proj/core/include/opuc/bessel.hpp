#pragma once

#include <vector>

#include "opuc/types.hpp"

namespace opuc {

enum class HalfOrder { MinusHalf, Half, ThreeHalves };

// Elementary forms of J_{-1/2}, J_{1/2}, J_{3/2} with principal-branch
// square roots. Throws std::domain_error at 0.
cplx bessel_half(HalfOrder order, cplx zz);

// The entire kernel
//   J*(a, b) = (S(a) C(b) - S(b) C(a)) / (pi (a - b)),  S(a) = sin(sqrt a)/sqrt a,  C(a) = cos(sqrt a),
// and on the diagonal J*(a, a) = (1 - sin(2 sqrt a)/(2 sqrt a)) / (2 pi a). S and C
// are even in sqrt(a), so no branch choice leaks into the result. Pairs closer
// than kJstarDiagonalSwitch use the diagonal form at (a + b)/2.
cplx jstar(cplx a, cplx b);

inline constexpr double kJstarDiagonalSwitch = 1e-6;
// Below this max(|a|, |b|) the kernel is summed as a power series.
inline constexpr double kJstarDiagonalSeriesRadius = 0.5;

struct JzReport {
  double min_modulus;
  cplx argmin;
  std::size_t points;
  // Of (x sinh y - y sin x)/(x^2 + y^2) over the positive-quadrant (x, y) grid.
  double sinh_margin_min;
  bool sinh_margin_positive;
};

// Minimum of |J*(t, conj t)| over the t grid, plus the sign of
// (x sinh y - y sin x)/(x^2 + y^2) on the supplied positive-quadrant points.
JzReport jz_scan(const std::vector<cplx>& t_grid, const std::vector<std::pair<double, double>>& xy_grid);

// n x n grid over the square [-half_width, half_width]^2 restricted to the disk of
// radius half_width.
std::vector<cplx> square_grid_in_disk(double half_width, std::size_t per_side);

}  // namespace opuc
