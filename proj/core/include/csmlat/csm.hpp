#pragma once

// The MacPherson-Schwartz-Chern natural transformation on the coordinate
// subcategory. Two independent computation paths are exposed: the orbit rule
// (primary) and the closed-subspace binomial rule; they must agree, and the
// tests hold them to that.

#include <vector>

#include "csmlat/constructible.hpp"
#include "csmlat/homology.hpp"
#include "csmlat/varmaps.hpp"

namespace csmlat {

// Orbit rule, extended linearly: csm(1_{O_S}) = [P^{|S|-1}].
HomologyClass csm(const ConstructibleFunction& f);

// Independent second path: decompose f into closed-subspace indicators
// (superset Moebius inversion of the orbit coefficients), then apply
// csm(1_{P_S}) = sum_i C(|S|, i+1) [P^i], the capped total Chern class of a
// linearly embedded P^{|S|-1}.
HomologyClass csm_via_subspaces(const ConstructibleFunction& f);

// Degree-i component of csm(f).
HomologyClass csm_component(const ConstructibleFunction& f, int degree);

// Coefficients of c(T P^k) = (1+h)^{k+1} truncated at h^k:
// (C(k+1,0), ..., C(k+1,k)).
std::vector<Integer> total_chern_coefficients(int k);

struct Theorem1Witness {
  int n = 0;
  int i = 0;
  HomologyClass lhs;  // degree-i component of csm(1_{P^n})
  HomologyClass rhs;  // C(n+1, i+1) * incl_* (degree-i component of csm(1_{P^i}))
  bool equal = false;
};

// Checks csm_component(1_{P^n}, i) = C(n+1, i+1) * incl_* csm_component(1_{P^i}, i)
// along the standard inclusion P^i -> P^n. Requires 0 <= i < n.
Theorem1Witness verify_theorem1(int n, int i);

struct QuotientWitness {
  int n = 0;
  long d = 1;
  std::vector<Integer> diagonal;  // homology action of the power map, degree 0..n
  bool homology_bijective = false;
  Integer group_order;            // deck group of the power map: d^n
  Rational top_coefficient;       // coefficient of 1_{O_{0..n}} in f_* 1_{P^n}
  bool top_matches_group_order = false;
  bool remainder_lower_dimensional = false;
  bool pass = false;
};

// Instantiates the Galois-quotient check for the degree-d power map on P^n:
// the homology pushforward is bijective over Q in every degree, and
// f_* 1_{P^n} = |G| * 1_{P^n} + (a function supported on strata of dimension
// < n) with |G| = d^n.
QuotientWitness verify_quotient_isomorphism(int n, long d);

struct CsmDecomposition {
  // r_i = coefficient of [P^i] in tau(1_{P^i}).
  std::vector<Rational> coefficients;
  // residual_i = tau(1_{P^i}) - sum_j r_j csm_component(1_{P^i}, j).
  std::vector<HomologyClass> residuals;
  bool residuals_vanish = false;
};

// Given candidate transformation values tau(1_{P^i}) for i = 0..N (one class
// per ambient P^i), extracts the rational combination of CSM components with
// the same values on the 1_{P^i} and reports the residuals.
CsmDecomposition decompose_into_csm(const std::vector<HomologyClass>& taus);

}  // namespace csmlat
