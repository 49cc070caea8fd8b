#include "csmlat/constructible.hpp"

#include <bit>
#include <stdexcept>

namespace csmlat {

namespace {

void check_same_ambient(const ConstructibleFunction& a,
                        const ConstructibleFunction& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument(
        "constructible functions live on different ambient spaces");
  }
}

}  // namespace

ConstructibleFunction::ConstructibleFunction(AmbientSpace ambient)
    : ambient_(ambient), coeffs_(ambient.lattice_size(), Rational(0)) {}

const Rational& ConstructibleFunction::coeff(std::uint32_t mask) const {
  if (mask == 0 || mask > ambient_.full_mask()) {
    throw std::invalid_argument("stratum bit pattern outside the lattice");
  }
  return coeffs_[mask];
}

void ConstructibleFunction::set_coeff(std::uint32_t mask,
                                      const Rational& value) {
  if (mask == 0 || mask > ambient_.full_mask()) {
    throw std::invalid_argument("stratum bit pattern outside the lattice");
  }
  coeffs_[mask] = value;
}

bool ConstructibleFunction::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

ConstructibleFunction& ConstructibleFunction::operator+=(
    const ConstructibleFunction& other) {
  check_same_ambient(*this, other);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

ConstructibleFunction& ConstructibleFunction::operator-=(
    const ConstructibleFunction& other) {
  check_same_ambient(*this, other);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

ConstructibleFunction& ConstructibleFunction::operator*=(
    const Rational& scalar) {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) coeffs_[i] *= scalar;
  }
  return *this;
}

ConstructibleFunction indicator_orbit(const StratumSet& s) {
  ConstructibleFunction f(s.ambient());
  f.set_coeff(s.mask(), Rational(1));
  return f;
}

ConstructibleFunction indicator_subspace(const StratumSet& s) {
  // P_S is the disjoint union of the orbits O_T over nonempty T subset of S.
  ConstructibleFunction f(s.ambient());
  const std::uint32_t m = s.mask();
  for (std::uint32_t t = m; t != 0; t = (t - 1) & m) {
    f.set_coeff(t, Rational(1));
  }
  return f;
}

ConstructibleFunction indicator_L(AmbientSpace ambient, int k) {
  if (k < 0 || k > ambient.dim()) {
    throw std::out_of_range("L_k needs 0 <= k <= n");
  }
  ConstructibleFunction f(ambient);
  for (std::uint32_t mask = 1; mask <= ambient.full_mask(); ++mask) {
    if (std::popcount(mask) <= k + 1) {
      f.set_coeff(mask, Rational(1));
    }
  }
  return f;
}

ConstructibleFunction indicator_U(AmbientSpace ambient, int k) {
  if (k < 0 || k > ambient.dim()) {
    throw std::out_of_range("U_k needs 0 <= k <= n");
  }
  ConstructibleFunction f(ambient);
  for (std::uint32_t mask = 1; mask <= ambient.full_mask(); ++mask) {
    if (std::popcount(mask) == k + 1) {
      f.set_coeff(mask, Rational(1));
    }
  }
  return f;
}

ConstructibleFunction indicator_space(AmbientSpace ambient) {
  return indicator_L(ambient, ambient.dim());
}

Rational evaluate(const ConstructibleFunction& f, std::uint32_t support) {
  if (support == 0) {
    throw std::invalid_argument(
        "a projective point has at least one nonzero coordinate");
  }
  return f.coeff(support);
}

Rational euler_integral(const ConstructibleFunction& f) {
  Rational total(0);
  for (int i = 0; i <= f.ambient().dim(); ++i) {
    const Rational& c = f.orbit_coeffs()[std::uint32_t{1} << i];
    if (sgn(c) != 0) total += c;
  }
  return total;
}

}  // namespace csmlat
