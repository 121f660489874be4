#include "opuc/gaussian_rational.hpp"

#include <stdexcept>

namespace opuc {

namespace {

// Splits "a+bi" at the sign that starts the second term (not a leading sign).
std::size_t find_term_split(std::string_view s) {
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') return k;
  }
  return std::string_view::npos;
}

Rational parse_imaginary_coefficient(std::string_view term) {
  // term ends in 'i'
  auto body = term.substr(0, term.size() - 1);
  if (body.empty() || body == "+") return Rational(1);
  if (body == "-") return Rational(-1);
  return Rational::parse(body);
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("GaussianRational: empty input");
  const bool has_i = text.back() == 'i';
  if (!has_i) return GaussianRational(Rational::parse(text));
  const auto split = find_term_split(text);
  if (split == std::string_view::npos) return {Rational(0), parse_imaginary_coefficient(text)};
  return {Rational::parse(text.substr(0, split)), parse_imaginary_coefficient(text.substr(split))};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out = re_.is_zero() ? "" : re_.to_string();
  if (im_.sign() > 0 && !out.empty()) out += "+";
  return out + im_.to_string() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational d = o.norm();
  if (d.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

}  // namespace opuc
