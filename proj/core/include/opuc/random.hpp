#pragma once

#include <cstdint>
#include <random>

#include "opuc/gaussian_rational.hpp"
#include "opuc/szego.hpp"

namespace opuc {

// Uniform over Gaussian rationals p/q + (r/q) i with 1 <= q <= max_den and
// p^2 + r^2 < q^2, so |alpha|^2 < 1 holds exactly.
GaussianRational random_disk_point(std::mt19937_64& rng, long max_den = 9);

ExactVerblunsky random_verblunsky(std::mt19937_64& rng, std::size_t length, long max_den = 9);

}  // namespace opuc
