#pragma once

// Combinatorics of the coordinate-stratum lattice of P^n: subset strata,
// canonical enumeration, and subset-lattice zeta/Moebius transforms.

#include <cstdint>
#include <vector>

#include "csmlat/rational.hpp"

namespace csmlat {

// Complex projective space P^n with homogeneous coordinates indexed 0..n.
class AmbientSpace {
 public:
  explicit AmbientSpace(int dim);

  int dim() const { return dim_; }
  int coord_count() const { return dim_ + 1; }
  std::uint32_t full_mask() const {
    return (std::uint32_t{1} << (dim_ + 1)) - 1;
  }
  // Size of a dense lattice vector: 2^{n+1} entries, one per subset of {0..n}.
  std::size_t lattice_size() const { return std::size_t{1} << (dim_ + 1); }

  // Configurable cap on n; full-lattice vectors must stay desk-scale.
  static int max_dimension();
  static void set_max_dimension(int value);

  friend bool operator==(AmbientSpace a, AmbientSpace b) {
    return a.dim_ == b.dim_;
  }
  friend bool operator!=(AmbientSpace a, AmbientSpace b) {
    return a.dim_ != b.dim_;
  }

 private:
  int dim_;
};

// A nonempty subset S of {0..n}, stored as a bit pattern. S names the torus
// orbit O_S (points whose nonzero coordinates are exactly S) and its closure,
// the coordinate subspace P_S (all coordinates outside S vanish).
class StratumSet {
 public:
  StratumSet(AmbientSpace ambient, std::uint32_t mask);
  static StratumSet from_indices(AmbientSpace ambient,
                                 const std::vector<int>& indices);

  AmbientSpace ambient() const { return ambient_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;                              // |S|
  int dimension() const { return size() - 1; }   // dim O_S = dim P_S
  bool contains(int index) const;
  std::vector<int> indices() const;              // ascending

  friend bool operator==(const StratumSet& a, const StratumSet& b) {
    return a.ambient_ == b.ambient_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const StratumSet& a, const StratumSet& b) {
    return !(a == b);
  }
  // Canonical order: by (|S|, numeric bit pattern) ascending.
  friend bool operator<(const StratumSet& a, const StratumSet& b);

 private:
  AmbientSpace ambient_;
  std::uint32_t mask_;
};

int orbit_dimension(const StratumSet& s);

// All strata of dimension k in canonical order; there are C(n+1, k+1).
std::vector<StratumSet> strata_of_dimension(AmbientSpace ambient, int k);

// All nonempty strata in canonical order; there are 2^{n+1} - 1.
std::vector<StratumSet> all_strata(AmbientSpace ambient);

// Dense vector over the subset lattice, indexed by bit pattern. Entry 0
// (the empty set) must be zero; the transforms reject anything else.
using LatticeVector = std::vector<Rational>;

// out[S] = sum of in[T] over nonempty T with T subset of S.
LatticeVector zeta_transform(const LatticeVector& v);
// Inverse of zeta_transform: out[S] = sum over T subset of S of
// (-1)^{|S|-|T|} in[T].
LatticeVector moebius_transform(const LatticeVector& v);

// Superset-sum companion: out[S] = sum of in[T] over T containing S.
LatticeVector zeta_superset_transform(const LatticeVector& v);
// Inverse of zeta_superset_transform.
LatticeVector moebius_superset_transform(const LatticeVector& v);

}  // namespace csmlat
