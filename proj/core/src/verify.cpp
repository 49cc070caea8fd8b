#include "csmlat/verify.hpp"

#include <stdexcept>
#include <utility>

namespace csmlat {

namespace {

// The generator maps with target P^n, in a fixed order.
std::vector<VarietyMap> generator_maps(int n, const std::vector<long>& degrees) {
  AmbientSpace space(n);
  std::vector<VarietyMap> maps;
  for (long d : degrees) {
    maps.push_back(VarietyMap::power(space, d));
  }
  if (n >= 1) {
    AmbientSpace smaller(n - 1);
    for (int omit = 0; omit <= n; ++omit) {
      std::vector<int> image(n);
      for (int i = 0; i < n; ++i) image[i] = (i < omit) ? i : i + 1;
      maps.push_back(VarietyMap::inclusion(smaller, space, std::move(image)));
    }
    for (int t = 0; t < n; ++t) {
      std::vector<int> image(n + 1);
      for (int i = 0; i <= n; ++i) image[i] = i;
      std::swap(image[t], image[t + 1]);
      maps.push_back(VarietyMap::permutation(space, std::move(image)));
    }
  }
  return maps;
}

}  // namespace

NaturalityReport run_naturality_suite(int max_n,
                                      const std::vector<long>& degrees) {
  if (max_n < 0) throw std::invalid_argument("naturality suite needs max_n >= 0");
  NaturalityReport report;
  report.max_n = max_n;
  report.degrees = degrees;
  for (int n = 0; n <= max_n; ++n) {
    for (const VarietyMap& map : generator_maps(n, degrees)) {
      NaturalityCell cell;
      cell.n = n;
      cell.map = map.descriptor();
      for (const StratumSet& s : all_strata(map.source())) {
        const ConstructibleFunction f = indicator_orbit(s);
        const HomologyClass lhs = csm(pushforward_cf(map, f));
        const HomologyClass rhs = pushforward_homology(map, csm(f));
        ++cell.checked;
        if (lhs != rhs) {
          cell.failures.push_back(NaturalityFailure{s.mask(), lhs, rhs});
        }
      }
      cell.pass = cell.failures.empty();
      (cell.pass ? report.passed : report.failed) += 1;
      report.cells.push_back(std::move(cell));
    }
  }
  report.pass = (report.failed == 0);
  return report;
}

Theorem1Report run_theorem1_suite(int max_n) {
  if (max_n < 0) throw std::invalid_argument("theorem1 suite needs max_n >= 0");
  Theorem1Report report;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 0; i < n; ++i) {
      Theorem1Witness w = verify_theorem1(n, i);
      (w.equal ? report.passed : report.failed) += 1;
      report.cells.push_back(std::move(w));
    }
  }
  report.pass = (report.failed == 0);
  return report;
}

QuotientReport run_quotient_suite(int max_n, const std::vector<long>& degrees) {
  if (max_n < 0) throw std::invalid_argument("quotient suite needs max_n >= 0");
  QuotientReport report;
  report.max_n = max_n;
  report.degrees = degrees;
  for (int n = 0; n <= max_n; ++n) {
    for (long d : degrees) {
      QuotientWitness w = verify_quotient_isomorphism(n, d);
      (w.pass ? report.passed : report.failed) += 1;
      report.cells.push_back(std::move(w));
    }
  }
  report.pass = (report.failed == 0);
  return report;
}

}  // namespace csmlat
