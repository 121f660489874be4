#include "opuc/random.hpp"

namespace opuc {

GaussianRational random_disk_point(std::mt19937_64& rng, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long q = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-(q - 1), q - 1);
  for (;;) {
    const long p = num_dist(rng);
    const long r = num_dist(rng);
    if (p * p + r * r < q * q) return {Rational(p, q), Rational(r, q)};
  }
}

ExactVerblunsky random_verblunsky(std::mt19937_64& rng, std::size_t length, long max_den) {
  std::vector<GaussianRational> alphas;
  alphas.reserve(length);
  for (std::size_t j = 0; j < length; ++j) alphas.push_back(random_disk_point(rng, max_den));
  return ExactVerblunsky(std::move(alphas));
}

}  // namespace opuc
