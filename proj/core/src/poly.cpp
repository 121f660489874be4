#include "opuc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace opuc {

GaussianRationalPoly::GaussianRationalPoly(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

GaussianRationalPoly::GaussianRationalPoly(std::vector<GaussianRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

GaussianRationalPoly GaussianRationalPoly::monomial(std::size_t k, GaussianRational c) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return GaussianRationalPoly(std::move(coeffs));
}

void GaussianRationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational GaussianRationalPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
}

GaussianRational GaussianRationalPoly::evaluate(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

GaussianRationalPoly GaussianRationalPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<GaussianRational> coeffs(k);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return GaussianRationalPoly(std::move(coeffs));
}

GaussianRationalPoly GaussianRationalPoly::divided_by_z_power(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  for (std::size_t j = 0; j < k && j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) throw std::domain_error("divided_by_z_power: nonzero remainder");
  }
  if (k >= coeffs_.size()) return {};
  return GaussianRationalPoly(std::vector<GaussianRational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

GaussianRationalPoly GaussianRationalPoly::conj_coeffs() const {
  GaussianRationalPoly out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

std::string GaussianRationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k == 1) out += "z";
    if (k > 1) out += "z^" + std::to_string(k);
  }
  return out;
}

GaussianRationalPoly GaussianRationalPoly::operator-() const {
  GaussianRationalPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GaussianRationalPoly& GaussianRationalPoly::operator+=(const GaussianRationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

GaussianRationalPoly& GaussianRationalPoly::operator-=(const GaussianRationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

GaussianRationalPoly operator*(const GaussianRationalPoly& a, const GaussianRationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GaussianRationalPoly(std::move(out));
}

GaussianRationalPoly& GaussianRationalPoly::operator*=(const GaussianRationalPoly& o) {
  *this = *this * o;
  return *this;
}

GaussianRationalPoly& GaussianRationalPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

GaussianRationalPoly& GaussianRationalPoly::operator/=(const GaussianRational& c) {
  if (c.is_zero()) throw std::domain_error("GaussianRationalPoly: division by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

GaussianRationalPoly star(const GaussianRationalPoly& p, long n) {
  if (n < 0) throw std::invalid_argument("star: negative nominal degree");
  if (p.degree() > n) {
    throw std::invalid_argument("star: degree " + std::to_string(p.degree()) + " exceeds nominal degree " +
                                std::to_string(n));
  }
  std::vector<GaussianRational> out(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(n - k)).conj();
  return GaussianRationalPoly(std::move(out));
}

}  // namespace opuc
