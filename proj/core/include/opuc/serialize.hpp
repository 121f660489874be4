#pragma once

#include <string>
#include <string_view>

#include "opuc/poly.hpp"

namespace opuc {

// JSON form: [[re_num, re_den, im_num, im_den], ...] in ascending degree.
// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings; the reader accepts either.
std::string poly_to_json(const GaussianRationalPoly& p);
GaussianRationalPoly poly_from_json(std::string_view text);

}  // namespace opuc
