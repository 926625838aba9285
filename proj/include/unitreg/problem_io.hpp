#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "unitreg/balance.hpp"
#include "unitreg/ffla.hpp"
#include "unitreg/lvw.hpp"
#include "unitreg/transformation.hpp"
#include "unitreg/txy.hpp"

namespace unitreg {

using Problem = std::variant<InvariantSetPair, InvariantSubspacePair>;

// Line-oriented key=value problem text. '#' starts a comment, blank lines
// are skipped, whitespace around keys, values and list items is ignored.
//
//   kind = transform          kind = linear
//   n = 4                     p = 2
//   Y = 0, 1                  n = 2
//   f = 0 0 2 2               W = 1 0          (rows split on ';', empty = {0})
//                             f = 0 0; 1 0
//
// Malformed text throws ParseError; a pair violating Yf ⊆ Y or Wf ⊆ W
// throws InvarianceViolated.
Problem parse_problem(std::istream& in);
Problem parse_problem_text(const std::string& text);

struct ReportOptions {
  bool with_oracle = false;
  bool with_witness = false;
  int point_bound = kDefaultPointBound;
  std::uint64_t matrix_bound = kDefaultMatrixBound;
};

struct TransformWitnessCheck {
  Transformation g;
  Transformation fg;
  Transformation fgf;
  bool verified = false;
};

struct LinearWitnessCheck {
  FFMatrix g;
  FFMatrix fg;
  FFMatrix fgf;
  bool verified = false;
};

// Everything one `check` run produced; absent members were not requested.
struct Report {
  Problem problem;
  std::optional<TxyDecision> transform_decision;
  std::optional<LvwDecision> linear_decision;
  BalanceReport balance;
  std::optional<TransformWitnessCheck> transform_witness;
  std::optional<LinearWitnessCheck> linear_witness;
  std::optional<bool> oracle_found;
  std::optional<Transformation> oracle_transform;
  std::optional<FFMatrix> oracle_matrix;
  std::optional<bool> agreement;  // criterion decision == oracle decision

  bool unit_regular() const;
};

Report build_report(const Problem& problem, const ReportOptions& options);

// Deterministic renderings; JSON keys are emitted in sorted order.
std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace unitreg
