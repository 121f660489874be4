#include "opuc/szego.hpp"

#include <cmath>
#include <string>

namespace opuc {

namespace {

bool inside_disk(const GaussianRational& a) { return a.norm() < Rational(1); }
bool inside_disk(const cplx& a) { return std::isfinite(a.real()) && std::isfinite(a.imag()) && std::abs(a) < 1.0; }

template <class Scalar>
void require_length(const VerblunskySequence<Scalar>& alphas, std::size_t n) {
  if (n > alphas.size()) {
    throw std::out_of_range("szego: degree " + std::to_string(n) + " needs more than the " +
                            std::to_string(alphas.size()) + " available coefficients");
  }
}

constexpr double kRescaleAbove = 0x1p930;

}  // namespace

template <class Scalar>
VerblunskySequence<Scalar>::VerblunskySequence(std::vector<Scalar> alphas) : alphas_(std::move(alphas)) {
  for (std::size_t j = 0; j < alphas_.size(); ++j) {
    if (!inside_disk(alphas_[j])) {
      throw std::invalid_argument("Verblunsky coefficient " + std::to_string(j) + " is not inside the unit disk");
    }
  }
}

template <class Scalar>
VerblunskySequence<Scalar> VerblunskySequence<Scalar>::negated() const {
  VerblunskySequence out;
  out.alphas_.reserve(alphas_.size());
  for (const auto& a : alphas_) out.alphas_.push_back(-a);
  return out;
}

template class VerblunskySequence<GaussianRational>;
template class VerblunskySequence<cplx>;

std::vector<PolyPair<GaussianRationalPoly>> szego_sequence(const ExactVerblunsky& alphas, std::size_t n) {
  require_length(alphas, n);
  std::vector<PolyPair<GaussianRationalPoly>> out;
  out.reserve(n + 1);
  out.push_back({GaussianRationalPoly(1), GaussianRationalPoly(1), 0, Normalization::Monic, 0});
  const auto z = GaussianRationalPoly::z();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& prev = out.back();
    const GaussianRational& a = alphas[k];
    // Phi_{k+1} = z Phi_k - conj(a) Phi_k^*,  Phi_{k+1}^* = Phi_k^* - a z Phi_k
    auto phi = prev.first.shifted(1) - a.conj() * prev.star;
    auto phi_star = prev.star - a * prev.first.shifted(1);
    out.push_back({std::move(phi), std::move(phi_star), static_cast<long>(k + 1), Normalization::Monic, 0});
  }
  return out;
}

PolyPair<GaussianRationalPoly> szego_iterate(const ExactVerblunsky& alphas, std::size_t n) {
  return std::move(szego_sequence(alphas, n).back());
}

PolyPair<cplx> szego_iterate(const FloatVerblunsky& alphas, std::size_t n, cplx z) {
  require_length(alphas, n);
  cplx phi = 1.0;
  cplx phi_star = 1.0;
  long exponent = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = alphas[k];
    const cplx next = z * phi - std::conj(a) * phi_star;
    phi_star = phi_star - a * z * phi;
    phi = next;
    const double m = std::max(std::abs(phi), std::abs(phi_star));
    if (m > kRescaleAbove) {
      int e = 0;
      std::frexp(m, &e);
      phi = std::ldexp(1.0, -e) * phi;
      phi_star = std::ldexp(1.0, -e) * phi_star;
      exponent += e;
    }
  }
  return {phi, phi_star, static_cast<long>(n), Normalization::Monic, exponent};
}

std::vector<PolyPair<GaussianRationalPoly>> second_kind_sequence(const ExactVerblunsky& alphas, std::size_t n) {
  return szego_sequence(alphas.negated(), n);
}

PolyPair<GaussianRationalPoly> second_kind_iterate(const ExactVerblunsky& alphas, std::size_t n) {
  return szego_iterate(alphas.negated(), n);
}

PolyPair<cplx> second_kind_iterate(const FloatVerblunsky& alphas, std::size_t n, cplx z) {
  return szego_iterate(alphas.negated(), n, z);
}

bool wronskian_identity_check(const ExactVerblunsky& alphas, std::size_t n) {
  const auto phi = szego_iterate(alphas, n);
  const auto psi = second_kind_iterate(alphas, n);
  Rational product(1);
  for (std::size_t j = 0; j < n; ++j) product *= Rational(1) - alphas[j].norm();
  const auto lhs = psi.star * phi.first + phi.star * psi.first;
  return lhs == GaussianRationalPoly::monomial(n, GaussianRational(Rational(2) * product));
}

Matrix2<GaussianRationalPoly> transfer_matrix(const GaussianRational& alpha) {
  return {GaussianRationalPoly::z(), GaussianRationalPoly(-alpha.conj()), GaussianRationalPoly::monomial(1, -alpha),
          GaussianRationalPoly(1)};
}

}  // namespace opuc
