#include "csmlat/json_io.hpp"

namespace csmlat {

Json to_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json to_json(const ConstructibleFunction& f) {
  Json terms = Json::array();
  for (const StratumSet& s : all_strata(f.ambient())) {
    const Rational& c = f.orbit_coeffs()[s.mask()];
    if (sgn(c) == 0) continue;
    Json term;
    term["stratum"] = s.indices();
    term["num"] = c.get_num().get_str();
    term["den"] = c.get_den().get_str();
    terms.push_back(std::move(term));
  }
  return Json{{"ambient", f.ambient().dim()}, {"terms", std::move(terms)}};
}

Json to_json(const HomologyClass& h) {
  Json components = Json::array();
  for (int k = 0; k <= h.ambient().dim(); ++k) {
    Json entry;
    entry["degree"] = k;
    entry["num"] = h[k].get_num().get_str();
    entry["den"] = h[k].get_den().get_str();
    components.push_back(std::move(entry));
  }
  return Json{{"ambient", h.ambient().dim()},
              {"components", std::move(components)}};
}

Json to_json(const Theorem1Witness& w) {
  return Json{{"n", w.n},
              {"i", w.i},
              {"lhs", to_json(w.lhs)},
              {"rhs", to_json(w.rhs)},
              {"equal", w.equal}};
}

Json to_json(const QuotientWitness& w) {
  Json diagonal = Json::array();
  for (const Integer& x : w.diagonal) diagonal.push_back(x.get_str());
  return Json{{"n", w.n},
              {"d", w.d},
              {"diagonal", std::move(diagonal)},
              {"homology_bijective", w.homology_bijective},
              {"group_order", w.group_order.get_str()},
              {"top_coefficient", to_json(w.top_coefficient)},
              {"top_matches_group_order", w.top_matches_group_order},
              {"remainder_lower_dimensional", w.remainder_lower_dimensional},
              {"pass", w.pass}};
}

Json to_json(const NaturalityReport& report) {
  Json cells = Json::array();
  for (const NaturalityCell& cell : report.cells) {
    Json failures = Json::array();
    for (const NaturalityFailure& f : cell.failures) {
      failures.push_back(Json{{"stratum_mask", f.stratum_mask},
                              {"lhs", to_json(f.lhs)},
                              {"rhs", to_json(f.rhs)}});
    }
    cells.push_back(Json{{"n", cell.n},
                         {"map", cell.map},
                         {"checked", cell.checked},
                         {"failures", std::move(failures)},
                         {"pass", cell.pass}});
  }
  return Json{{"suite", "naturality"}, {"max_n", report.max_n},
              {"degrees", report.degrees}, {"cells", std::move(cells)},
              {"passed", report.passed},  {"failed", report.failed},
              {"pass", report.pass}};
}

Json to_json(const Theorem1Report& report) {
  Json cells = Json::array();
  for (const Theorem1Witness& w : report.cells) cells.push_back(to_json(w));
  return Json{{"suite", "theorem1"}, {"max_n", report.max_n},
              {"cells", std::move(cells)}, {"passed", report.passed},
              {"failed", report.failed}, {"pass", report.pass}};
}

Json to_json(const QuotientReport& report) {
  Json cells = Json::array();
  for (const QuotientWitness& w : report.cells) cells.push_back(to_json(w));
  return Json{{"suite", "quotient"}, {"max_n", report.max_n},
              {"degrees", report.degrees}, {"cells", std::move(cells)},
              {"passed", report.passed},   {"failed", report.failed},
              {"pass", report.pass}};
}

Json to_json(const SubcategorySpec& spec) {
  return Json{{"max_ambient", spec.max_ambient},
              {"power_degrees", spec.power_degrees},
              {"inclusions", spec.include_inclusions},
              {"permutations", spec.include_permutations}};
}

Json to_json(const CandidateTransformation& tau) {
  Json values = Json::array();
  for (int m = 0; m <= tau.max_ambient(); ++m) {
    AmbientSpace space(m);
    for (const StratumSet& s : all_strata(space)) {
      const HomologyClass& h = tau.value(m, s.mask());
      if (h.is_zero()) continue;
      values.push_back(Json{{"object", m},
                            {"stratum", s.indices()},
                            {"value", to_json(h)}});
    }
  }
  return Json{{"max_ambient", tau.max_ambient()},
              {"values", std::move(values)}};
}

Json to_json(const UniquenessReport& report) {
  Json basis = Json::array();
  for (const CandidateTransformation& tau : report.basis) {
    basis.push_back(to_json(tau));
  }
  Json coefficients = Json::array();
  for (const std::vector<Rational>& rs : report.csm_coefficients_of_basis) {
    Json row = Json::array();
    for (const Rational& r : rs) row.push_back(to_json(r));
    coefficients.push_back(std::move(row));
  }
  return Json{{"spec", to_json(report.spec)},
              {"unknown_count", report.unknown_count},
              {"constraint_count", report.constraint_count},
              {"constraint_counts",
               Json{{"power", report.power_rows},
                    {"inclusion", report.inclusion_rows},
                    {"permutation", report.permutation_rows}}},
              {"dimension", report.dimension},
              {"expected_dimension", report.expected_dimension},
              {"span_equal", report.span_equal},
              {"basis", std::move(basis)},
              {"csm_coefficients", std::move(coefficients)},
              {"failures", report.failures},
              {"pass", report.pass}};
}

Json to_json(const IntegralLatticeReport& report) {
  return Json{{"experimental", true},
              {"spec", to_json(report.spec)},
              {"unknown_count", report.unknown_count},
              {"lattice_rank", report.lattice_rank},
              {"spanned_by_csm", report.spanned_by_csm}};
}

}  // namespace csmlat
