#include "csmlat/homology.hpp"

#include <stdexcept>

namespace csmlat {

HomologyClass::HomologyClass(AmbientSpace ambient)
    : ambient_(ambient), coeffs_(ambient.coord_count(), Rational(0)) {}

const Rational& HomologyClass::operator[](int degree) const {
  if (degree < 0 || degree > ambient_.dim()) {
    throw std::out_of_range("homology degree outside 0..n");
  }
  return coeffs_[degree];
}

Rational& HomologyClass::operator[](int degree) {
  if (degree < 0 || degree > ambient_.dim()) {
    throw std::out_of_range("homology degree outside 0..n");
  }
  return coeffs_[degree];
}

bool HomologyClass::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  if (ambient_ != other.ambient_) {
    throw std::invalid_argument(
        "homology classes live on different ambient spaces");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  if (ambient_ != other.ambient_) {
    throw std::invalid_argument(
        "homology classes live on different ambient spaces");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

HomologyClass& HomologyClass::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) {
    if (sgn(c) != 0) c *= scalar;
  }
  return *this;
}

HomologyClass fundamental_class(AmbientSpace ambient) {
  HomologyClass h(ambient);
  h[ambient.dim()] = 1;
  return h;
}

HomologyClass component(const HomologyClass& h, int degree) {
  if (degree < 0 || degree > h.ambient().dim()) {
    throw std::out_of_range("homology degree outside 0..n");
  }
  HomologyClass out(h.ambient());
  out[degree] = h[degree];
  return out;
}

HomologyClass top_component(const HomologyClass& h) {
  return component(h, h.ambient().dim());
}

}  // namespace csmlat
