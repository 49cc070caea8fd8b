// Command-line front end: a small expression language over the orbit and
// subspace indicators, driving Euler integration, pushforward, CSM
// evaluation, the verification suites, and the uniqueness solver.
//
// Exit codes: 0 on success/PASS, 1 on any FAIL verdict, 2 on usage or parse
// errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csmlat/csm.hpp"
#include "csmlat/expr.hpp"
#include "csmlat/json_io.hpp"
#include "csmlat/solver.hpp"
#include "csmlat/verify.hpp"

namespace {

using namespace csmlat;

struct CommonFlags {
  int ambient = -1;  // -1: not set
  bool json = false;
  bool quiet = false;

  std::optional<int> ambient_opt() const {
    if (ambient < 0) return std::nullopt;
    return ambient;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--ambient", flags.ambient,
                  "Ambient projective dimension n (inferred from P/L/U atoms "
                  "when omitted)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", flags.json, "Emit JSON instead of text");
  cmd->add_flag("--quiet", flags.quiet, "Suppress per-cell output");
}

std::uint32_t parse_support(const std::string& text, AmbientSpace ambient) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') {
      throw std::invalid_argument("support must look like {i,j,...}");
    }
    body = body.substr(1, body.size() - 2);
  }
  std::uint32_t mask = 0;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long index = std::stol(item, &used);
    if (used != item.size() || index < 0 || index > ambient.dim()) {
      throw std::invalid_argument("bad support index '" + item + "'");
    }
    mask |= std::uint32_t{1} << index;
  }
  if (mask == 0) {
    throw std::invalid_argument("support must name at least one coordinate");
  }
  return mask;
}

int run_chi(const std::string& expr, const CommonFlags& flags) {
  const ConstructibleFunction f = parse_expression(expr, flags.ambient_opt());
  const Rational value = euler_integral(f);
  if (flags.json) {
    Json out{{"command", "chi"},
             {"ambient", f.ambient().dim()},
             {"value", to_json(value)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << to_string(value) << '\n';
  }
  return 0;
}

int run_csm(const std::string& expr, const CommonFlags& flags) {
  const ConstructibleFunction f = parse_expression(expr, flags.ambient_opt());
  const HomologyClass h = csm(f);
  if (flags.json) {
    Json out{{"command", "csm"},
             {"ambient", f.ambient().dim()},
             {"class", to_json(h)}};
    std::cout << out.dump() << '\n';
  } else {
    for (int k = 0; k <= h.ambient().dim(); ++k) {
      std::cout << "degree " << k << ": " << to_string(h[k]) << '\n';
    }
  }
  return 0;
}

int run_push(const std::string& descriptor, const std::string& expr,
             const CommonFlags& flags) {
  std::optional<int> ambient = flags.ambient_opt();
  if (!ambient && descriptor.rfind("incl:", 0) == 0) {
    throw std::invalid_argument(
        "pass --ambient to fix the inclusion's target space");
  }
  ConstructibleFunction f = ambient
      ? parse_expression(
            expr,
            VarietyMap::parse_descriptor(descriptor, AmbientSpace(*ambient))
                .source()
                .dim())
      : parse_expression(expr, std::nullopt);
  const VarietyMap map = VarietyMap::parse_descriptor(
      descriptor, ambient ? AmbientSpace(*ambient) : f.ambient());
  const ConstructibleFunction pushed = pushforward_cf(map, f);
  if (flags.json) {
    Json out{{"command", "push"},
             {"map", map.descriptor()},
             {"function", to_json(pushed)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << serialize(pushed) << '\n';
  }
  return 0;
}

int run_eval(const std::string& support_text, const std::string& expr,
             const CommonFlags& flags) {
  const ConstructibleFunction f = parse_expression(expr, flags.ambient_opt());
  const std::uint32_t support = parse_support(support_text, f.ambient());
  const Rational value = evaluate(f, support);
  if (flags.json) {
    Json out{{"command", "eval"},
             {"ambient", f.ambient().dim()},
             {"support", StratumSet(f.ambient(), support).indices()},
             {"value", to_json(value)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << to_string(value) << '\n';
  }
  return 0;
}

void print_cell(bool pass, const std::string& label, bool quiet) {
  if (pass && quiet) return;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << label << '\n';
}

int run_verify(const std::string& suite, int max_n,
               std::vector<long> degrees, const CommonFlags& flags) {
  if (suite == "naturality") {
    if (max_n < 0) max_n = 6;
    if (degrees.empty()) degrees = {1, 2, 3, 5};
    const NaturalityReport report = run_naturality_suite(max_n, degrees);
    if (flags.json) {
      std::cout << to_json(report).dump() << '\n';
    } else {
      for (const NaturalityCell& cell : report.cells) {
        print_cell(cell.pass,
                   "naturality n=" + std::to_string(cell.n) + " map=" +
                       cell.map + " (" + std::to_string(cell.checked) +
                       " strata)",
                   flags.quiet);
      }
      std::cout << "naturality: " << report.passed << "/"
                << (report.passed + report.failed) << " cells passed\n";
    }
    return report.pass ? 0 : 1;
  }
  if (suite == "theorem1") {
    if (max_n < 0) max_n = 10;
    const Theorem1Report report = run_theorem1_suite(max_n);
    if (flags.json) {
      std::cout << to_json(report).dump() << '\n';
    } else {
      for (const Theorem1Witness& w : report.cells) {
        print_cell(w.equal,
                   "theorem1 n=" + std::to_string(w.n) +
                       " i=" + std::to_string(w.i),
                   flags.quiet);
      }
      std::cout << "theorem1: " << report.passed << "/"
                << (report.passed + report.failed) << " cells passed\n";
    }
    return report.pass ? 0 : 1;
  }
  if (suite == "quotient") {
    if (max_n < 0) max_n = 6;
    if (degrees.empty()) degrees = {1, 2, 3, 4, 5};
    const QuotientReport report = run_quotient_suite(max_n, degrees);
    if (flags.json) {
      std::cout << to_json(report).dump() << '\n';
    } else {
      for (const QuotientWitness& w : report.cells) {
        print_cell(w.pass,
                   "quotient n=" + std::to_string(w.n) +
                       " d=" + std::to_string(w.d) + " |G|=" +
                       w.group_order.get_str(),
                   flags.quiet);
      }
      std::cout << "quotient: " << report.passed << "/"
                << (report.passed + report.failed) << " cells passed\n";
    }
    return report.pass ? 0 : 1;
  }
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (naturality, theorem1, or quotient)");
}

int run_solve(int max_ambient, std::vector<long> degrees, bool no_inclusions,
              bool no_permutations, bool json_requested,
              const std::string& json_path, bool integral,
              const CommonFlags& flags) {
  SubcategorySpec spec;
  spec.max_ambient = max_ambient;
  if (!degrees.empty()) spec.power_degrees = degrees;
  spec.include_inclusions = !no_inclusions;
  spec.include_permutations = !no_permutations;

  const UniquenessReport report = uniqueness_report(spec);
  Json out = to_json(report);

  std::optional<IntegralLatticeReport> integral_report;
  if (integral) {
    integral_report = integral_lattice_report(spec);
    out["integral"] = to_json(*integral_report);
  }

  const bool emit_json = json_requested || flags.json;
  if (emit_json && json_path.empty()) {
    std::cout << out.dump() << '\n';
  } else {
    if (emit_json) {
      std::ofstream file(json_path);
      if (!file) {
        throw std::invalid_argument("cannot write JSON report to '" +
                                    json_path + "'");
      }
      file << out.dump(2) << '\n';
    }
    if (!flags.quiet) {
      std::cout << "solver: N=" << spec.max_ambient << ", degrees={";
      for (std::size_t i = 0; i < spec.power_degrees.size(); ++i) {
        std::cout << (i ? "," : "") << spec.power_degrees[i];
      }
      std::cout << "}, inclusions="
                << (spec.include_inclusions ? "on" : "off")
                << ", permutations="
                << (spec.include_permutations ? "on" : "off") << '\n';
      std::cout << "unknowns: " << report.unknown_count << '\n';
      std::cout << "constraints: " << report.constraint_count << " (power "
                << report.power_rows << ", inclusion " << report.inclusion_rows
                << ", permutation " << report.permutation_rows << ")\n";
      std::cout << "dimension: " << report.dimension << " (expected "
                << report.expected_dimension << ")\n";
      std::cout << "span equals CSM components: "
                << (report.span_equal ? "yes" : "no") << '\n';
      for (const std::string& failure : report.failures) {
        std::cout << "failure: " << failure << '\n';
      }
      if (integral_report) {
        std::cout << "integral (EXPERIMENTAL): lattice rank "
                  << integral_report->lattice_rank
                  << ", spanned by CSM restrictions over Z: "
                  << (integral_report->spanned_by_csm ? "yes" : "no") << '\n';
      }
    }
    std::cout << "verdict: " << (report.pass ? "PASS" : "FAIL") << '\n';
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("CSMLAT_MAX_AMBIENT")) {
    try {
      AmbientSpace::set_max_dimension(std::stoi(cap));
    } catch (const std::exception& e) {
      std::cerr << "bad CSMLAT_MAX_AMBIENT: " << e.what() << '\n';
      return 2;
    }
  }

  CLI::App app{
      "Exact Euler calculus and MacPherson-Schwartz-Chern classes on "
      "coordinate-stratified projective spaces"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string expr;
  std::string map_descriptor;
  std::string support;
  std::string suite;
  int max_n = -1;
  int max_ambient = 2;
  std::vector<long> degrees;
  bool no_inclusions = false;
  bool no_permutations = false;
  bool integral = false;
  std::string solve_json_path;

  CLI::App* chi_cmd =
      app.add_subcommand("chi", "Euler-characteristic integral of an expression");
  chi_cmd->add_option("expr", expr, "Constructible-function expression")
      ->required();
  add_common(chi_cmd, flags);

  CLI::App* csm_cmd =
      app.add_subcommand("csm", "CSM class of an expression, degree by degree");
  csm_cmd->add_option("expr", expr, "Constructible-function expression")
      ->required();
  add_common(csm_cmd, flags);

  CLI::App* push_cmd =
      app.add_subcommand("push", "Pushforward along a map descriptor");
  push_cmd
      ->add_option("--map", map_descriptor,
                   "Map descriptor: pow:d, incl:i0,...,im, perm:p0,...,pn")
      ->required();
  push_cmd->add_option("expr", expr, "Constructible-function expression")
      ->required();
  add_common(push_cmd, flags);

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Pointwise value at a support pattern");
  eval_cmd->add_option("--support", support, "Support set, e.g. {0,1}")
      ->required();
  eval_cmd->add_option("expr", expr, "Constructible-function expression")
      ->required();
  add_common(eval_cmd, flags);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("--suite", suite, "naturality, theorem1, or quotient")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "Largest ambient dimension");
  verify_cmd->add_option("--degrees", degrees, "Power-map degrees")
      ->delimiter(',');
  add_common(verify_cmd, flags);

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Solve the naturality system and compare with the CSM span");
  solve_cmd->add_option("--max-ambient", max_ambient, "Objects P^0..P^N")
      ->required();
  solve_cmd->add_option("--degrees", degrees, "Power-map degrees (>= 2)")
      ->delimiter(',');
  solve_cmd->add_flag("--no-inclusions", no_inclusions,
                      "Drop the coordinate-inclusion constraints");
  solve_cmd->add_flag("--no-permutations", no_permutations,
                      "Drop the permutation constraints");
  solve_cmd->add_flag("--integral", integral,
                      "EXPERIMENTAL: also compare the integer solution "
                      "lattice with the Z-span of the CSM restrictions");
  CLI::Option* solve_json = solve_cmd->add_option(
      "--json", solve_json_path,
      "Emit the JSON report (to stdout, or to a file when a path is given)");
  solve_json->expected(0, 1);
  solve_cmd->add_option("--ambient", flags.ambient, "Unused alias")
      ->group("");  // hidden; solve is driven by --max-ambient
  solve_cmd->add_flag("--quiet", flags.quiet, "Suppress summary lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chi_cmd->parsed()) return run_chi(expr, flags);
    if (csm_cmd->parsed()) return run_csm(expr, flags);
    if (push_cmd->parsed()) return run_push(map_descriptor, expr, flags);
    if (eval_cmd->parsed()) return run_eval(support, expr, flags);
    if (verify_cmd->parsed()) return run_verify(suite, max_n, degrees, flags);
    if (solve_cmd->parsed()) {
      return run_solve(max_ambient, degrees, no_inclusions, no_permutations,
                       solve_json->count() > 0, solve_json_path, integral,
                       flags);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
