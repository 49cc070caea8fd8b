#pragma once

// The target functor at desk scale. H_{2*}(P^n; Q) and A_*(P^n) tensor Q are
// both free of rank one in each degree 0..n on the classes of linear
// subspaces [P^0]..[P^n]; one coefficient vector serves both theories.

#include "csmlat/strata.hpp"

namespace csmlat {

class HomologyClass {
 public:
  // The zero class on P^n.
  explicit HomologyClass(AmbientSpace ambient);

  AmbientSpace ambient() const { return ambient_; }
  // Coefficient of [P^k].
  const Rational& operator[](int degree) const;
  Rational& operator[](int degree);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  HomologyClass& operator*=(const Rational& scalar);

  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) {
    a += b;
    return a;
  }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) {
    a -= b;
    return a;
  }
  friend HomologyClass operator*(HomologyClass h, const Rational& r) {
    h *= r;
    return h;
  }
  friend HomologyClass operator*(const Rational& r, HomologyClass h) {
    h *= r;
    return h;
  }
  friend HomologyClass operator-(HomologyClass h) {
    h *= Rational(-1);
    return h;
  }
  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.ambient_ == b.ambient_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HomologyClass& a, const HomologyClass& b) {
    return !(a == b);
  }

 private:
  AmbientSpace ambient_;
  std::vector<Rational> coeffs_;  // c_0..c_n
};

// [P^n] itself: coefficient 1 in the top degree.
HomologyClass fundamental_class(AmbientSpace ambient);

// Projection onto degree i (all other coefficients zeroed).
HomologyClass component(const HomologyClass& h, int degree);

// Projection onto the top degree n.
HomologyClass top_component(const HomologyClass& h);

}  // namespace csmlat
