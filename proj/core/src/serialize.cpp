#include "opuc/serialize.hpp"

#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace opuc {

namespace {

using nlohmann::json;

json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("poly_from_json: bad integer string");
    }
  }
  throw std::invalid_argument("poly_from_json: coefficient entries must be integers");
}

}  // namespace

std::string poly_to_json(const GaussianRationalPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) {
    out.push_back({integer_to_json(c.re().numerator()), integer_to_json(c.re().denominator()),
                   integer_to_json(c.im().numerator()), integer_to_json(c.im().denominator())});
  }
  return out.dump();
}

GaussianRationalPoly poly_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("poly_from_json: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected array");
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 4) throw std::invalid_argument("poly_from_json: expected 4-tuples");
    coeffs.emplace_back(Rational(integer_from_json(c[0]), integer_from_json(c[1])),
                        Rational(integer_from_json(c[2]), integer_from_json(c[3])));
  }
  return GaussianRationalPoly(std::move(coeffs));
}

}  // namespace opuc
