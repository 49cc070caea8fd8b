#pragma once

// Assembles the homogeneous linear system that naturality imposes on an
// unknown transformation over the coordinate subcategory, solves it exactly
// over Q, and compares the solution space with the span of the CSM
// components. The subcategory here is generated by power maps, the omit-one
// coordinate inclusions, and adjacent transpositions; naturality for
// compositions follows from naturality for generators.

#include <cstdint>
#include <string>
#include <vector>

#include "csmlat/csm.hpp"
#include "csmlat/qlinalg.hpp"

namespace csmlat {

struct SubcategorySpec {
  int max_ambient = 2;                    // objects P^0..P^N
  std::vector<long> power_degrees{2, 3};  // one power map per degree, >= 2
  bool include_inclusions = true;         // omit-one inclusions P^{m-1}->P^m
  bool include_permutations = true;       // adjacent transpositions of P^m
  int cap = 6;  // exact elimination cost grows quickly past this

  void validate() const;
};

// Column order for the unknowns tau(1_{O_S})_degree: objects by ascending
// dimension, strata in canonical order within an object, degrees ascending
// within a stratum.
class UnknownIndex {
 public:
  explicit UnknownIndex(int max_ambient);

  struct Key {
    int object_dim;
    std::uint32_t stratum_mask;
    int degree;
  };

  int max_ambient() const { return max_ambient_; }
  std::size_t columns() const { return keys_.size(); }
  int column(int object_dim, std::uint32_t stratum_mask, int degree) const;
  const Key& key(int column) const { return keys_.at(column); }

 private:
  int max_ambient_;
  std::vector<Key> keys_;
  std::vector<int> object_offset_;                // per object dimension
  std::vector<std::vector<int>> stratum_rank_;    // per object: mask -> rank
};

enum class GeneratorKind { Power, Inclusion, Permutation };

struct RowProvenance {
  GeneratorKind kind;
  std::string map;             // descriptor of the generating map
  int object_dim;              // dimension of the map's source object
  std::uint32_t stratum_mask;  // orbit indicator fed through the square
  int degree;                  // homology degree of the row
};

class TransformationSystem {
 public:
  TransformationSystem(SubcategorySpec spec, UnknownIndex index);

  const SubcategorySpec& spec() const { return spec_; }
  const UnknownIndex& index() const { return index_; }
  const std::vector<SparseQVector>& rows() const { return rows_; }
  const std::vector<RowProvenance>& provenance() const { return provenance_; }
  std::size_t constraint_count() const { return rows_.size(); }
  std::size_t constraint_count(GeneratorKind kind) const;

  void add_row(SparseQVector row, RowProvenance prov);

 private:
  SubcategorySpec spec_;
  UnknownIndex index_;
  std::vector<SparseQVector> rows_;
  std::vector<RowProvenance> provenance_;
  std::size_t counts_[3] = {0, 0, 0};
};

// One constraint block per (object, generator map, orbit indicator): the
// expansion of tau(f_* 1_{O_S}) - f_* tau(1_{O_S}) degree by degree.
TransformationSystem assemble(const SubcategorySpec& spec);

// A transformation candidate on the subcategory: a homology class per
// (object, stratum), determining the transformation by linearity.
class CandidateTransformation {
 public:
  explicit CandidateTransformation(int max_ambient);

  int max_ambient() const { return max_ambient_; }
  const HomologyClass& value(int object_dim, std::uint32_t stratum_mask) const;
  HomologyClass& value(int object_dim, std::uint32_t stratum_mask);

  // tau applied to a function on P^m, m <= max_ambient.
  HomologyClass apply(const ConstructibleFunction& f) const;

  QVector flatten(const UnknownIndex& index) const;
  static CandidateTransformation from_vector(const UnknownIndex& index,
                                             const QVector& v);

  friend bool operator==(const CandidateTransformation& a,
                         const CandidateTransformation& b);

 private:
  int max_ambient_;
  // values_[m][mask]; slot 0 of each object is unused.
  std::vector<std::vector<HomologyClass>> values_;
};

// The restriction of the degree-i CSM component to the subcategory:
// tau(1_{O_S}) = [P^{|S|-1}] when |S|-1 = i, zero otherwise.
CandidateTransformation csm_restriction(int max_ambient, int i);

// Canonical nullspace basis of the assembled system, as transformations.
std::vector<CandidateTransformation> solve(const TransformationSystem& system);

struct EigenvalueFailure {
  int object_dim;
  int k;            // tau(1_{U_k}) should have no degree-i part for k != i
  Rational value;   // offending coefficient
};

struct EigenvalueWitness {
  int degree;
  bool pass = false;
  std::vector<EigenvalueFailure> failures;
};

// Checks the eigenvalue-vanishing mechanism on a solution: for every object
// P^m and every k != i, the degree-i part of tau(1_{U_k}) is zero.
EigenvalueWitness verify_eigenvalue_vanishing(
    const CandidateTransformation& tau, int degree);

struct UniquenessReport {
  SubcategorySpec spec;
  std::size_t unknown_count = 0;
  std::size_t constraint_count = 0;
  std::size_t power_rows = 0;
  std::size_t inclusion_rows = 0;
  std::size_t permutation_rows = 0;
  std::size_t dimension = 0;           // nullspace dimension
  std::size_t expected_dimension = 0;  // N + 1
  bool span_equal = false;  // nullspace == span of CSM restrictions
  std::vector<CandidateTransformation> basis;
  // Per basis vector: the r-vector from decompose_into_csm.
  std::vector<std::vector<Rational>> csm_coefficients_of_basis;
  std::vector<std::string> failures;
  bool pass = false;
};

// Solves the system, projects each basis vector through decompose_into_csm,
// verifies that the residual transformation vanishes on every orbit
// indicator, and reports the verdict. A FAILED verdict is report content.
UniquenessReport uniqueness_report(const SubcategorySpec& spec);

// ------------------------------------------------------------------
// Experimental: integral solution lattice over Z. The paper-level statement
// is a conjecture; this merely compares the integer kernel of the assembled
// system with the Z-span of the CSM restrictions at small N.
struct IntegralLatticeReport {
  SubcategorySpec spec;
  std::size_t unknown_count = 0;
  std::size_t lattice_rank = 0;
  bool spanned_by_csm = false;  // kernel lattice == Z-span of restrictions
};

IntegralLatticeReport integral_lattice_report(const SubcategorySpec& spec);

}  // namespace csmlat
