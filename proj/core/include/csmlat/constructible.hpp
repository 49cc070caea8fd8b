#pragma once

// The constructible-functions group C(P^n) restricted to the coordinate
// arrangement: every function in scope is constant on torus orbits, so it is
// a coefficient vector over the orbit basis {1_{O_S}}.

#include <cstdint>

#include "csmlat/strata.hpp"

namespace csmlat {

class ConstructibleFunction {
 public:
  // The zero function on P^n.
  explicit ConstructibleFunction(AmbientSpace ambient);

  AmbientSpace ambient() const { return ambient_; }
  const LatticeVector& orbit_coeffs() const { return coeffs_; }

  const Rational& coeff(std::uint32_t mask) const;
  const Rational& coeff(const StratumSet& s) const { return coeff(s.mask()); }
  void set_coeff(std::uint32_t mask, const Rational& value);
  void set_coeff(const StratumSet& s, const Rational& value) {
    set_coeff(s.mask(), value);
  }

  bool is_zero() const;

  ConstructibleFunction& operator+=(const ConstructibleFunction& other);
  ConstructibleFunction& operator-=(const ConstructibleFunction& other);
  ConstructibleFunction& operator*=(const Rational& scalar);

  friend ConstructibleFunction operator+(ConstructibleFunction a,
                                         const ConstructibleFunction& b) {
    a += b;
    return a;
  }
  friend ConstructibleFunction operator-(ConstructibleFunction a,
                                         const ConstructibleFunction& b) {
    a -= b;
    return a;
  }
  friend ConstructibleFunction operator*(ConstructibleFunction f,
                                         const Rational& r) {
    f *= r;
    return f;
  }
  friend ConstructibleFunction operator*(const Rational& r,
                                         ConstructibleFunction f) {
    f *= r;
    return f;
  }
  friend ConstructibleFunction operator-(ConstructibleFunction f) {
    f *= Rational(-1);
    return f;
  }
  friend bool operator==(const ConstructibleFunction& a,
                         const ConstructibleFunction& b) {
    return a.ambient_ == b.ambient_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const ConstructibleFunction& a,
                         const ConstructibleFunction& b) {
    return !(a == b);
  }

 private:
  AmbientSpace ambient_;
  LatticeVector coeffs_;  // index = stratum bit pattern; entry 0 stays zero
};

// 1 on the torus orbit O_S, 0 elsewhere.
ConstructibleFunction indicator_orbit(const StratumSet& s);

// 1 on the coordinate subspace P_S (the closure of O_S), 0 elsewhere.
ConstructibleFunction indicator_subspace(const StratumSet& s);

// 1 where at least n-k coordinates vanish: the union of the dimension-<=k
// coordinate subspaces.
ConstructibleFunction indicator_L(AmbientSpace ambient, int k);

// 1 where exactly n-k coordinates vanish: the dimension-k orbits.
ConstructibleFunction indicator_U(AmbientSpace ambient, int k);

// 1 everywhere on P^n; equals indicator_L(ambient, n).
ConstructibleFunction indicator_space(AmbientSpace ambient);

// Value of f at any point whose nonzero coordinates are exactly `support`.
// Supports are a complete invariant here: every function in scope is constant
// on orbits. Throws on the empty support (no such projective point).
Rational evaluate(const ConstructibleFunction& f, std::uint32_t support);

// Pushforward to a point: sum of coeff[S] * chi(O_S), where
// chi(O_S) = 0^{|S|-1} (an algebraic torus of positive dimension has Euler
// characteristic zero). Only singleton strata contribute.
Rational euler_integral(const ConstructibleFunction& f);

}  // namespace csmlat
