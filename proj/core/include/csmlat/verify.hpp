#pragma once

// Batch verification suites behind the CLI `verify` command: the commuting
// naturality squares, the binomial pushforward identity across dimensions,
// and the Galois-quotient instance for power maps.

#include <string>
#include <vector>

#include "csmlat/csm.hpp"

namespace csmlat {

struct NaturalityFailure {
  std::uint32_t stratum_mask;
  HomologyClass lhs;  // csm(f_* 1_{O_S})
  HomologyClass rhs;  // f_* csm(1_{O_S})
};

struct NaturalityCell {
  int n;            // dimension of the map's target object
  std::string map;  // descriptor
  int checked = 0;  // orbit indicators fed through the square
  std::vector<NaturalityFailure> failures;
  bool pass = false;
};

struct NaturalityReport {
  int max_n = 0;
  std::vector<long> degrees;
  std::vector<NaturalityCell> cells;
  int passed = 0;
  int failed = 0;
  bool pass = false;
};

// Checks csm(pushforward_cf(g, 1_{O_S})) == pushforward_homology(g, csm(1_{O_S}))
// for every generator map g with target P^n (power maps of the given degrees,
// omit-one inclusions, adjacent transpositions) and every source orbit, n <= max_n.
NaturalityReport run_naturality_suite(int max_n,
                                      const std::vector<long>& degrees);

struct Theorem1Report {
  int max_n = 0;
  std::vector<Theorem1Witness> cells;  // all 0 <= i < n <= max_n
  int passed = 0;
  int failed = 0;
  bool pass = false;
};

Theorem1Report run_theorem1_suite(int max_n);

struct QuotientReport {
  int max_n = 0;
  std::vector<long> degrees;
  std::vector<QuotientWitness> cells;
  int passed = 0;
  int failed = 0;
  bool pass = false;
};

QuotientReport run_quotient_suite(int max_n, const std::vector<long>& degrees);

}  // namespace csmlat
