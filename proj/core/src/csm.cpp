#include "csmlat/csm.hpp"

#include <bit>
#include <stdexcept>

namespace csmlat {

HomologyClass csm(const ConstructibleFunction& f) {
  HomologyClass out(f.ambient());
  const LatticeVector& coeffs = f.orbit_coeffs();
  for (std::uint32_t s = 1; s <= f.ambient().full_mask(); ++s) {
    if (sgn(coeffs[s]) != 0) {
      out[std::popcount(s) - 1] += coeffs[s];
    }
  }
  return out;
}

HomologyClass csm_via_subspaces(const ConstructibleFunction& f) {
  // f = sum_T closed[T] * 1_{P_T} where the orbit coefficients are the
  // superset sums of closed[.].
  const LatticeVector closed = moebius_superset_transform(f.orbit_coeffs());
  HomologyClass out(f.ambient());
  for (std::uint32_t t = 1; t <= f.ambient().full_mask(); ++t) {
    if (sgn(closed[t]) == 0) continue;
    const int k = std::popcount(t) - 1;  // P_T is a P^k
    for (int i = 0; i <= k; ++i) {
      out[i] += closed[t] * Rational(binomial(k + 1, i + 1));
    }
  }
  return out;
}

HomologyClass csm_component(const ConstructibleFunction& f, int degree) {
  if (degree < 0 || degree > f.ambient().dim()) {
    throw std::out_of_range("csm component degree outside 0..n");
  }
  return component(csm(f), degree);
}

std::vector<Integer> total_chern_coefficients(int k) {
  if (k < 0) {
    throw std::invalid_argument("total Chern coefficients need k >= 0");
  }
  std::vector<Integer> out;
  out.reserve(k + 1);
  for (int j = 0; j <= k; ++j) {
    out.push_back(binomial(k + 1, j));
  }
  return out;
}

Theorem1Witness verify_theorem1(int n, int i) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument("verify_theorem1 needs 0 <= i < n");
  }
  AmbientSpace big(n);
  AmbientSpace small(i);

  HomologyClass lhs = csm_component(indicator_space(big), i);

  std::vector<int> image(i + 1);
  for (int j = 0; j <= i; ++j) image[j] = j;
  const VarietyMap incl = VarietyMap::inclusion(small, big, std::move(image));
  HomologyClass rhs =
      Rational(binomial(n + 1, i + 1)) *
      pushforward_homology(incl, csm_component(indicator_space(small), i));
  const bool equal = (lhs == rhs);
  return Theorem1Witness{n, i, std::move(lhs), std::move(rhs), equal};
}

QuotientWitness verify_quotient_isomorphism(int n, long d) {
  if (n < 0) throw std::invalid_argument("quotient check needs n >= 0");
  if (d < 1) throw std::invalid_argument("quotient check needs d >= 1");
  AmbientSpace space(n);
  const VarietyMap pow_map = VarietyMap::power(space, d);

  QuotientWitness w;
  w.n = n;
  w.d = d;

  // Homology action, read off by pushing each basis class.
  w.homology_bijective = true;
  for (int k = 0; k <= n; ++k) {
    HomologyClass basis(space);
    basis[k] = 1;
    const HomologyClass pushed = pushforward_homology(pow_map, basis);
    Rational eigen = pushed[k];
    w.diagonal.push_back(eigen.get_num());
    if (sgn(eigen) == 0 || eigen.get_den() != 1) {
      w.homology_bijective = false;
    }
    // Off-diagonal entries would break the degreewise-free module structure.
    for (int j = 0; j <= n; ++j) {
      if (j != k && sgn(pushed[j]) != 0) w.homology_bijective = false;
    }
  }

  w.group_order = int_pow(static_cast<unsigned long>(d),
                          static_cast<unsigned long>(n));

  const ConstructibleFunction ones = indicator_space(space);
  const ConstructibleFunction pushed = pushforward_cf(pow_map, ones);
  w.top_coefficient = pushed.coeff(space.full_mask());
  w.top_matches_group_order = (w.top_coefficient == Rational(w.group_order));

  // f_* 1_{P^n} - |G| 1_{P^n} must live on strata of dimension < n; the only
  // dimension-n stratum is the full support set.
  ConstructibleFunction remainder = pushed - Rational(w.group_order) * ones;
  w.remainder_lower_dimensional = (sgn(remainder.coeff(space.full_mask())) == 0);

  w.pass = w.homology_bijective && w.top_matches_group_order &&
           w.remainder_lower_dimensional;
  return w;
}

CsmDecomposition decompose_into_csm(const std::vector<HomologyClass>& taus) {
  CsmDecomposition out;
  const int count = static_cast<int>(taus.size());
  for (int i = 0; i < count; ++i) {
    if (taus[i].ambient().dim() != i) {
      throw std::invalid_argument(
          "decompose_into_csm: value " + std::to_string(i) +
          " must be a class on P^" + std::to_string(i));
    }
    out.coefficients.push_back(taus[i][i]);
  }
  out.residuals_vanish = true;
  for (int i = 0; i < count; ++i) {
    HomologyClass residual = taus[i];
    // csm_component(1_{P^i}, j) = C(i+1, j+1) [P^j].
    for (int j = 0; j <= i; ++j) {
      if (sgn(out.coefficients[j]) != 0) {
        residual[j] -= out.coefficients[j] * Rational(binomial(i + 1, j + 1));
      }
    }
    if (!residual.is_zero()) out.residuals_vanish = false;
    out.residuals.push_back(std::move(residual));
  }
  return out;
}

}  // namespace csmlat
