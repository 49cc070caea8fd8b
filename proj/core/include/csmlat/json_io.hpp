#pragma once

// JSON forms of the public value and report types. Output is deterministic:
// insertion-ordered keys, canonical element order, reduced fractions
// rendered as num/den strings (arbitrary precision survives).

#include <nlohmann/json.hpp>

#include "csmlat/solver.hpp"
#include "csmlat/verify.hpp"

namespace csmlat {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ConstructibleFunction& f);
Json to_json(const HomologyClass& h);
Json to_json(const Theorem1Witness& w);
Json to_json(const QuotientWitness& w);
Json to_json(const NaturalityReport& report);
Json to_json(const Theorem1Report& report);
Json to_json(const QuotientReport& report);
Json to_json(const SubcategorySpec& spec);
Json to_json(const CandidateTransformation& tau);
Json to_json(const UniquenessReport& report);
Json to_json(const IntegralLatticeReport& report);

}  // namespace csmlat
