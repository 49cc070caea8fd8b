#pragma once

// Independent oracles for the tests: everything here recomputes expected
// values from definitions, without touching the implementation paths under
// test.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "csmlat/constructible.hpp"
#include "csmlat/strata.hpp"

namespace csmlat::testing {

// Pascal's triangle, independent of the GMP binomial.
inline long pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<long>> rows(n + 1);
  for (int r = 0; r <= n; ++r) {
    rows[r].assign(r + 1, 1);
    for (int c = 1; c < r; ++c) {
      rows[r][c] = rows[r - 1][c - 1] + rows[r - 1][c];
    }
  }
  return rows[n][k];
}

// Quadratic-time subset sum straight from the definition.
inline LatticeVector brute_zeta(const LatticeVector& v) {
  LatticeVector out(v.size(), Rational(0));
  for (std::uint32_t s = 1; s < v.size(); ++s) {
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
      out[s] += v[t];
    }
  }
  return out;
}

// Moebius sum with explicit signs, straight from the definition.
inline LatticeVector brute_moebius(const LatticeVector& v) {
  LatticeVector out(v.size(), Rational(0));
  for (std::uint32_t s = 1; s < v.size(); ++s) {
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
      const int sign =
          ((std::popcount(s) - std::popcount(t)) % 2 == 0) ? 1 : -1;
      out[s] += Rational(sign) * v[t];
    }
  }
  return out;
}

// chi(O_S) recovered by Moebius inversion from chi(P_T) = |T|, never from
// the closed form the implementation uses.
inline Rational chi_orbit_oracle(int stratum_size) {
  Rational total(0);
  for (int t = 1; t <= stratum_size; ++t) {
    const int sign = ((stratum_size - t) % 2 == 0) ? 1 : -1;
    total += Rational(sign * pascal_binomial(stratum_size, t) * t);
  }
  return total;
}

// Euler integral recomputed through the oracle chi values.
inline Rational euler_integral_oracle(const ConstructibleFunction& f) {
  Rational total(0);
  for (std::uint32_t s = 1; s <= f.ambient().full_mask(); ++s) {
    const Rational& c = f.orbit_coeffs()[s];
    if (sgn(c) != 0) {
      total += c * chi_orbit_oracle(std::popcount(s));
    }
  }
  return total;
}

class RandomRational {
 public:
  explicit RandomRational(unsigned seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return rational_from_parts(Integer(num(rng_)), Integer(den(rng_)));
  }

  long next_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  LatticeVector next_lattice_vector(AmbientSpace ambient) {
    LatticeVector v(ambient.lattice_size(), Rational(0));
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = next();
    return v;
  }

  ConstructibleFunction next_function(AmbientSpace ambient) {
    ConstructibleFunction f(ambient);
    for (std::uint32_t s = 1; s <= ambient.full_mask(); ++s) {
      f.set_coeff(s, next());
    }
    return f;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace csmlat::testing
