#include "unitreg/problem_io.hpp"

#include <istream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace unitreg {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    out.push_back(item);
  }
  if (!s.empty() && s.back() == sep) {
    out.push_back("");
  }
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(t, &used);
    if (used != t.size()) {
      throw ParseError(what + ": trailing characters in '" + t + "'");
    }
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(what + ": not an integer: '" + t + "'");
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& s, char sep,
                                         const std::string& what) {
  std::vector<std::int64_t> out;
  if (sep == ' ') {
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      out.push_back(parse_int(tok, what));
    }
  } else {
    for (const auto& piece : split(s, sep)) {
      if (trim(piece).empty()) {
        throw ParseError(what + ": empty item in list");
      }
      out.push_back(parse_int(piece, what));
    }
  }
  return out;
}

std::map<std::string, std::string> read_pairs(std::istream& in) {
  static const std::map<std::string, int> known = {
      {"kind", 0}, {"n", 0}, {"Y", 0}, {"f", 0}, {"p", 0}, {"W", 0}};
  std::map<std::string, std::string> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!known.count(key)) {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (pairs.count(key)) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    pairs[key] = trim(line.substr(eq + 1));
  }
  return pairs;
}

const std::string& require(const std::map<std::string, std::string>& pairs,
                           const std::string& key) {
  const auto it = pairs.find(key);
  if (it == pairs.end()) {
    throw ParseError("missing key '" + key + "'");
  }
  return it->second;
}

Problem parse_transform(const std::map<std::string, std::string>& pairs) {
  const int n = static_cast<int>(parse_int(require(pairs, "n"), "n"));
  const auto y64 = parse_int_list(require(pairs, "Y"), ',', "Y");
  const auto img64 = parse_int_list(require(pairs, "f"), ' ', "f");
  std::vector<int> y(y64.begin(), y64.end());
  std::vector<int> img(img64.begin(), img64.end());
  try {
    return InvariantSetPair(n, std::move(y), Transformation(std::move(img)));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

Problem parse_linear(const std::map<std::string, std::string>& pairs) {
  const std::int64_t p = parse_int(require(pairs, "p"), "p");
  const int n = static_cast<int>(parse_int(require(pairs, "n"), "n"));
  if (n <= 0) {
    throw ParseError("n must be positive");
  }

  const auto parse_rows = [&](const std::string& text, const std::string& what) {
    std::vector<std::vector<std::int64_t>> rows;
    if (!trim(text).empty()) {
      for (const auto& row_text : split(text, ';')) {
        rows.push_back(parse_int_list(row_text, ' ', what));
        if (rows.back().size() != static_cast<std::size_t>(n)) {
          throw ParseError(what + ": row needs exactly " + std::to_string(n) + " entries");
        }
      }
    }
    return rows;
  };

  const auto w_rows = parse_rows(require(pairs, "W"), "W");
  const auto f_rows = parse_rows(require(pairs, "f"), "f");
  if (f_rows.size() != static_cast<std::size_t>(n)) {
    throw ParseError("f: need exactly " + std::to_string(n) + " rows");
  }
  try {
    const Subspace w = Subspace::span(from_rows(p, n, w_rows));
    return InvariantSubspacePair(w, from_rows(p, n, f_rows));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Problem parse_problem(std::istream& in) {
  const auto pairs = read_pairs(in);
  const std::string kind = require(pairs, "kind");
  if (kind == "transform") {
    return parse_transform(pairs);
  }
  if (kind == "linear") {
    return parse_linear(pairs);
  }
  throw ParseError("kind must be 'transform' or 'linear', got '" + kind + "'");
}

Problem parse_problem_text(const std::string& text) {
  std::istringstream in(text);
  return parse_problem(in);
}

bool Report::unit_regular() const {
  return transform_decision ? transform_decision->unit_regular
                            : linear_decision->unit_regular;
}

Report build_report(const Problem& problem, const ReportOptions& options) {
  Report r{problem, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  if (const auto* pair = std::get_if<InvariantSetPair>(&problem)) {
    r.transform_decision = check(*pair);
    r.balance = balance_transform(pair->f());
    if (options.with_witness && r.transform_decision->witness) {
      const auto& g = *r.transform_decision->witness;
      const auto fg = compose(pair->f(), g);
      const auto fgf = compose(fg, pair->f());
      r.transform_witness = {g, fg, fgf, verify_witness(*pair, g)};
    }
    if (options.with_oracle) {
      const auto found = oracle(*pair, options.point_bound);
      r.oracle_found = found.has_value();
      if (found) {
        r.oracle_transform = *found;
      }
      r.agreement = r.transform_decision->unit_regular == found.has_value();
    }
  } else {
    const auto& lpair = std::get<InvariantSubspacePair>(problem);
    r.linear_decision = check(lpair);
    r.balance = balance_linear(lpair.f());
    if (options.with_witness && r.linear_decision->witness) {
      const auto& g = *r.linear_decision->witness;
      const auto fg = multiply(lpair.f(), g);
      const auto fgf = multiply(fg, lpair.f());
      r.linear_witness = {g, fg, fgf, verify_witness(lpair, g)};
    }
    if (options.with_oracle) {
      const auto found = oracle(lpair, options.matrix_bound);
      r.oracle_found = found.has_value();
      if (found) {
        r.oracle_matrix = *found;
      }
      r.agreement = r.linear_decision->unit_regular == found.has_value();
    }
  }
  return r;
}

namespace {

using nlohmann::json;

json to_json(const Transformation& f) { return json(f.images()); }

json to_json(const FFMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
  }
  return rows;
}

json problem_json(const Problem& problem) {
  json j;
  if (const auto* pair = std::get_if<InvariantSetPair>(&problem)) {
    j["n"] = pair->n();
    j["y"] = pair->y();
    j["f"] = to_json(pair->f());
  } else {
    const auto& lpair = std::get<InvariantSubspacePair>(problem);
    j["p"] = lpair.p();
    j["n"] = lpair.n();
    j["w"] = to_json(lpair.w().basis());
    j["f"] = to_json(lpair.f());
  }
  return j;
}

std::string format_images(const Transformation& f) {
  std::string out = "[";
  for (int i = 0; i < f.size(); ++i) {
    out += (i ? " " : "") + std::to_string(f(i));
  }
  return out + "]";
}

std::string format_matrix(const FFMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) {
      out += "; ";
    }
    for (int j = 0; j < m.cols(); ++j) {
      out += (j ? " " : "") + std::to_string(m.at(i, j));
    }
  }
  return out + "]";
}

std::string format_set(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(s[i]);
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_json(const Report& report) {
  json j;
  j["problem"] = problem_json(report.problem);
  j["kind"] = report.transform_decision ? "transform" : "linear";
  if (report.transform_decision) {
    const auto& d = *report.transform_decision;
    j["decision"] = {{"unit_regular", d.unit_regular},
                     {"cond_i", d.cond_i},
                     {"cond_ii", d.cond_ii},
                     {"cond_iii", d.cond_iii},
                     {"collapse_set", d.collapse_set},
                     {"collapse_set_y", d.collapse_set_y},
                     {"defect_set", d.defect_set},
                     {"defect_set_y", d.defect_set_y}};
  } else {
    const auto& d = *report.linear_decision;
    j["decision"] = {{"unit_regular", d.unit_regular},
                     {"cond_i", d.cond_i},
                     {"cond_ii", d.cond_ii},
                     {"cond_iii", d.cond_iii},
                     {"dims",
                      {{"range_restriction", d.dim_range_restriction},
                       {"w_meet_range", d.dim_w_meet_range},
                       {"null_restriction", d.dim_null_restriction},
                       {"w_plus_transversal", d.dim_w_plus_transversal},
                       {"w_plus_range", d.dim_w_plus_range}}}};
  }
  j["balance"] = {{"collapse", report.balance.collapse},
                  {"defect", report.balance.defect},
                  {"semi_balanced", report.balance.semi_balanced}};
  if (report.transform_witness) {
    const auto& w = *report.transform_witness;
    j["witness"] = {{"g", to_json(w.g)},
                    {"fg", to_json(w.fg)},
                    {"fgf", to_json(w.fgf)},
                    {"verified", w.verified}};
  }
  if (report.linear_witness) {
    const auto& w = *report.linear_witness;
    j["witness"] = {{"g", to_json(w.g)},
                    {"fg", to_json(w.fg)},
                    {"fgf", to_json(w.fgf)},
                    {"verified", w.verified}};
  }
  if (report.oracle_found) {
    json o;
    o["found"] = *report.oracle_found;
    if (report.oracle_transform) {
      o["g"] = to_json(*report.oracle_transform);
    }
    if (report.oracle_matrix) {
      o["g"] = to_json(*report.oracle_matrix);
    }
    o["agreement"] = *report.agreement;
    j["oracle"] = o;
  }
  return j.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  if (const auto* pair = std::get_if<InvariantSetPair>(&report.problem)) {
    const auto& d = *report.transform_decision;
    out << "kind:           transform\n";
    out << "n:              " << pair->n() << "\n";
    out << "Y:              " << format_set(pair->y()) << "\n";
    out << "f:              " << format_images(pair->f()) << "\n";
    out << "unit regular:   " << yes_no(d.unit_regular) << "\n";
    out << "  (i)   f|Y unit-regular in T(Y):   " << yes_no(d.cond_i) << "\n";
    out << "  (ii)  R(f|Y) = Y n R(f):          " << yes_no(d.cond_ii) << "\n";
    out << "  (iii) |C\\C_Y| = |D\\D_Y|:          " << yes_no(d.cond_iii) << "\n";
    out << "  C(f):   " << format_set(d.collapse_set)
        << "  C(f|Y): " << format_set(d.collapse_set_y) << "\n";
    out << "  D(f):   " << format_set(d.defect_set)
        << "  D(f|Y): " << format_set(d.defect_set_y) << "\n";
  } else {
    const auto& lpair = std::get<InvariantSubspacePair>(report.problem);
    const auto& d = *report.linear_decision;
    out << "kind:           linear\n";
    out << "p:              " << lpair.p() << "\n";
    out << "n:              " << lpair.n() << "\n";
    out << "W basis:        " << format_matrix(lpair.w().basis()) << "\n";
    out << "f:              " << format_matrix(lpair.f()) << "\n";
    out << "unit regular:   " << yes_no(d.unit_regular) << "\n";
    out << "  (i)   R(f|W) = W n R(f):          " << yes_no(d.cond_i) << "\n";
    out << "  (ii)  nullity(f|W) = corank(f|W): " << yes_no(d.cond_ii) << "\n";
    out << "  (iii) codim(W+T_f) = codim(W+R(f)): " << yes_no(d.cond_iii) << "\n";
    out << "  dim R(f|W) = " << d.dim_range_restriction
        << ", dim W n R(f) = " << d.dim_w_meet_range
        << ", dim N(f|W) = " << d.dim_null_restriction << "\n";
    out << "  dim W+T_f = " << d.dim_w_plus_transversal
        << ", dim W+R(f) = " << d.dim_w_plus_range << "\n";
  }
  out << "collapse:       " << report.balance.collapse << "\n";
  out << "defect:         " << report.balance.defect << "\n";
  out << "semi-balanced:  " << yes_no(report.balance.semi_balanced) << "\n";
  if (report.transform_witness) {
    const auto& w = *report.transform_witness;
    out << "witness g:      " << format_images(w.g) << "\n";
    out << "  f.g:          " << format_images(w.fg) << "\n";
    out << "  f.g.f:        " << format_images(w.fgf) << "\n";
    out << "  verified:     " << yes_no(w.verified) << "\n";
  }
  if (report.linear_witness) {
    const auto& w = *report.linear_witness;
    out << "witness g:      " << format_matrix(w.g) << "\n";
    out << "  f.g:          " << format_matrix(w.fg) << "\n";
    out << "  f.g.f:        " << format_matrix(w.fgf) << "\n";
    out << "  verified:     " << yes_no(w.verified) << "\n";
  }
  if (report.oracle_found) {
    out << "oracle:         " << (*report.oracle_found ? "witness found" : "no witness exists")
        << "\n";
    if (report.oracle_transform) {
      out << "  oracle g:     " << format_images(*report.oracle_transform) << "\n";
    }
    if (report.oracle_matrix) {
      out << "  oracle g:     " << format_matrix(*report.oracle_matrix) << "\n";
    }
    out << "agreement:      " << yes_no(*report.agreement) << "\n";
  }
  return out.str();
}

}  // namespace unitreg
