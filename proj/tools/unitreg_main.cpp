// Command-line front end: check one element, construct/verify witnesses,
// run the brute-force oracle, sweep whole universes, and answer the
// semigroup-level questions. Machine output via --json.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "unitreg/problem_io.hpp"
#include "unitreg/scan.hpp"

namespace {

using nlohmann::json;
using namespace unitreg;

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return parse_problem(in);
}

std::optional<long long> env_bound() {
  if (const char* s = std::getenv("UNITREG_BOUND")) {
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      throw ParseError("UNITREG_BOUND is not an integer");
    }
  }
  return std::nullopt;
}

// One knob, interpreted per kind: for transformations it caps the domain
// size n of any brute-force unit search, for linear problems it caps the
// number p^(n*n) of candidate matrices. Flag wins over UNITREG_BOUND.
struct Bounds {
  int point_bound = kDefaultPointBound;
  std::uint64_t matrix_bound = kDefaultMatrixBound;
};

Bounds resolve_bounds(const std::optional<long long>& flag) {
  Bounds b;
  const auto chosen = flag ? flag : env_bound();
  if (chosen) {
    if (*chosen <= 0) {
      throw ParseError("bound must be positive");
    }
    b.point_bound = static_cast<int>(std::min<long long>(*chosen, 1 << 20));
    b.matrix_bound = static_cast<std::uint64_t>(*chosen);
  }
  return b;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvarianceViolated& e) {
    std::cerr << "invariance violated: " << e.what() << "\n";
    return 3;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 4;
  } catch (const NotUnitRegular& e) {
    std::cerr << "not unit-regular: " << e.what() << "\n";
    return 5;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  }
}

int run_report(const std::string& path, const ReportOptions& options, bool as_json,
               bool require_unit_regular) {
  const Problem problem = load_problem(path);
  const Report report = build_report(problem, options);
  std::cout << (as_json ? render_json(report) : render_text(report));
  if (require_unit_regular && !report.unit_regular()) {
    throw NotUnitRegular("no witness: the element is not unit-regular");
  }
  if (report.agreement && !*report.agreement) {
    return 1;
  }
  if ((report.transform_witness && !report.transform_witness->verified) ||
      (report.linear_witness && !report.linear_witness->verified)) {
    return 1;
  }
  return 0;
}

int run_scan(const std::string& kind, int max_n, std::int64_t p, const Bounds& bounds,
             bool as_json) {
  if (max_n < 1) {
    throw ParseError("--max-n must be at least 1");
  }
  ScanOutcome outcome;
  if (kind == "transform") {
    outcome = scan_transform(max_n, bounds.point_bound);
  } else {
    if (!is_prime(p)) {
      throw ParseError("--p must be prime, got " + std::to_string(p));
    }
    outcome = scan_linear(p, max_n, bounds.matrix_bound);
  }
  if (as_json) {
    json j{{"kind", kind},
           {"universes", outcome.universes},
           {"total", outcome.total},
           {"unit_regular", outcome.unit_regular},
           {"semi_balanced", outcome.semi_balanced},
           {"disagreements", outcome.disagreements},
           {"witness_failures", outcome.witness_failures},
           {"balance_violations", outcome.balance_violations},
           {"ok", outcome.ok()}};
    if (kind == "linear") {
      j["p"] = p;
    }
    j["max_n"] = max_n;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kind:               " << kind << "\n";
    if (kind == "linear") {
      std::cout << "p:                  " << p << "\n";
    }
    std::cout << "max n:              " << max_n << "\n";
    std::cout << "universes:          " << outcome.universes << "\n";
    std::cout << "elements:           " << outcome.total << "\n";
    std::cout << "unit-regular:       " << outcome.unit_regular << "\n";
    std::cout << "semi-balanced:      " << outcome.semi_balanced << "\n";
    std::cout << "disagreements:      " << outcome.disagreements << "\n";
    std::cout << "witness failures:   " << outcome.witness_failures << "\n";
    std::cout << "balance violations: " << outcome.balance_violations << "\n";
    std::cout << (outcome.ok() ? "OK" : "FAILED") << "\n";
  }
  return outcome.ok() ? 0 : 1;
}

struct SemigroupParams {
  std::string file;
  std::string kind = "transform";
  int n = 0;
  std::string y_text;
  std::int64_t p = 2;
  std::string w_text;
};

int run_semigroup(const SemigroupParams& params, const Bounds& bounds, bool as_json) {
  Problem problem = [&]() -> Problem {
    if (!params.file.empty()) {
      return load_problem(params.file);
    }
    // Build a problem with the identity map, which stabilizes everything;
    // only the (n, Y) or (p, n, W) parameters matter here.
    std::ostringstream text;
    if (params.kind == "transform") {
      text << "kind = transform\nn = " << params.n << "\nY = " << params.y_text << "\nf =";
      for (int i = 0; i < params.n; ++i) {
        text << ' ' << i;
      }
      text << "\n";
    } else {
      text << "kind = linear\np = " << params.p << "\nn = " << params.n
           << "\nW = " << params.w_text << "\nf =";
      for (int i = 0; i < params.n; ++i) {
        if (i) {
          text << " ;";
        }
        for (int j = 0; j < params.n; ++j) {
          text << ' ' << (i == j ? 1 : 0);
        }
      }
      text << "\n";
    }
    return parse_problem_text(text.str());
  }();

  bool unit_regular = false;
  std::string clause;
  std::string balance_clause;
  std::optional<bool> exhaustive_all;
  json descr;

  if (const auto* pair = std::get_if<InvariantSetPair>(&problem)) {
    const int n = pair->n();
    const auto& y = pair->y();
    unit_regular = semigroup_unit_regular(n, y);
    clause = y.size() == 1 ? "|Y| = 1"
             : static_cast<int>(y.size()) == n ? "Y = X"
                                               : "Y is a proper subset with |Y| >= 2";
    balance_clause = "X is finite";
    descr = {{"kind", "transform"}, {"n", n}, {"y", y}};
    if (n <= bounds.point_bound) {
      exhaustive_all = exhaustive_unit_regular(n, y, bounds.point_bound);
    }
  } else {
    const auto& lpair = std::get<InvariantSubspacePair>(problem);
    const auto& w = lpair.w();
    unit_regular = semigroup_unit_regular(w);
    clause = w.dim() == 0            ? "W = {0}"
             : w.dim() == w.ambient() ? "W = V"
                                      : "W is a nontrivial proper subspace";
    balance_clause = "V is finite-dimensional";
    json rows = json::array();
    for (int i = 0; i < w.dim(); ++i) {
      rows.push_back(w.basis_row(i));
    }
    descr = {{"kind", "linear"}, {"p", lpair.p()}, {"n", lpair.n()}, {"w", rows}};
    if (unit_candidate_count(lpair.p(), lpair.n()) <= bounds.matrix_bound) {
      exhaustive_all = exhaustive_unit_regular(w, bounds.matrix_bound);
    }
  }

  const bool agrees = !exhaustive_all || *exhaustive_all == unit_regular;
  if (as_json) {
    json j{{"params", descr},
           {"unit_regular", unit_regular},
           {"unit_regular_clause", clause},
           {"semi_balanced", true},
           {"semi_balanced_clause", balance_clause}};
    if (exhaustive_all) {
      j["exhaustive"] = {{"all_unit_regular", *exhaustive_all}, {"agrees", agrees}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "unit-regular:   " << (unit_regular ? "yes" : "no") << "  (" << clause
              << ")\n";
    std::cout << "semi-balanced:  yes  (" << balance_clause << ")\n";
    if (exhaustive_all) {
      std::cout << "exhaustive:     every element "
                << (*exhaustive_all ? "is unit-regular" : "NOT unit-regular (some fail)")
                << ", agrees: " << (agrees ? "yes" : "no") << "\n";
    } else {
      std::cout << "exhaustive:     skipped (above bound)\n";
    }
  }
  return agrees ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit-regularity and semi-balancedness in transformation monoids "
               "with an invariant subset/subspace"};
  app.require_subcommand(1);

  std::string file;
  bool with_oracle = false;
  bool with_witness = false;
  bool as_json = false;
  std::optional<long long> bound_flag;

  auto* cmd_check = app.add_subcommand("check", "decide unit-regularity of one element");
  cmd_check->add_option("file", file, "problem file")->required();
  cmd_check->add_flag("--oracle", with_oracle, "also run the brute-force unit search");
  cmd_check->add_flag("--witness", with_witness, "also print the constructed witness");
  cmd_check->add_flag("--json", as_json, "machine-readable output");
  cmd_check->add_option("--bound", bound_flag, "enumeration bound (overrides UNITREG_BOUND)");

  auto* cmd_witness = app.add_subcommand("witness", "construct and verify the witness unit");
  cmd_witness->add_option("file", file, "problem file")->required();
  cmd_witness->add_flag("--json", as_json, "machine-readable output");
  cmd_witness->add_option("--bound", bound_flag, "enumeration bound");

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force search over all units");
  cmd_oracle->add_option("file", file, "problem file")->required();
  cmd_oracle->add_flag("--json", as_json, "machine-readable output");
  cmd_oracle->add_option("--bound", bound_flag, "enumeration bound");

  std::string scan_kind;
  int scan_max_n = 0;
  std::int64_t scan_p = 2;
  auto* cmd_scan = app.add_subcommand("scan", "cross-validate criterion/oracle/witness "
                                              "over a whole universe family");
  cmd_scan->add_option("--kind", scan_kind, "transform or linear")
      ->required()
      ->check(CLI::IsMember({"transform", "linear"}));
  cmd_scan->add_option("--max-n", scan_max_n, "largest domain size / dimension");
  cmd_scan->add_option("--p", scan_p, "prime modulus (linear only)");
  cmd_scan->add_flag("--json", as_json, "machine-readable output");
  cmd_scan->add_option("--bound", bound_flag, "enumeration bound");

  SemigroupParams sg;
  auto* cmd_semigroup =
      app.add_subcommand("semigroup", "is the whole monoid unit-regular / semi-balanced?");
  cmd_semigroup->add_option("file", sg.file, "problem file (f is ignored)");
  cmd_semigroup->add_option("--kind", sg.kind, "transform or linear")
      ->check(CLI::IsMember({"transform", "linear"}));
  cmd_semigroup->add_option("-n,--n", sg.n, "domain size / dimension");
  cmd_semigroup->add_option("--Y", sg.y_text, "comma-separated subset, e.g. 0,1");
  cmd_semigroup->add_option("--p", sg.p, "prime modulus (linear only)");
  cmd_semigroup->add_option("--W", sg.w_text, "basis rows, ';'-separated (empty = {0})");
  cmd_semigroup->add_flag("--json", as_json, "machine-readable output");
  cmd_semigroup->add_option("--bound", bound_flag, "enumeration bound");

  CLI11_PARSE(app, argc, argv);

  return guarded([&]() -> int {
    const Bounds bounds = resolve_bounds(bound_flag);
    ReportOptions options;
    options.point_bound = bounds.point_bound;
    options.matrix_bound = bounds.matrix_bound;
    if (app.got_subcommand(cmd_check)) {
      options.with_oracle = with_oracle;
      options.with_witness = with_witness;
      return run_report(file, options, as_json, false);
    }
    if (app.got_subcommand(cmd_witness)) {
      options.with_witness = true;
      return run_report(file, options, as_json, true);
    }
    if (app.got_subcommand(cmd_oracle)) {
      options.with_oracle = true;
      return run_report(file, options, as_json, false);
    }
    if (app.got_subcommand(cmd_scan)) {
      if (scan_max_n == 0) {
        scan_max_n = scan_kind == "transform" ? 4 : 2;
      }
      return run_scan(scan_kind, scan_max_n, scan_p, bounds, as_json);
    }
    return run_semigroup(sg, bounds, as_json);
  });
}
