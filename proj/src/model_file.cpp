#include "flagclean/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "flagclean/lexing.hpp"

namespace flagclean {

std::string to_string(const Diagnostic& d, std::string_view source) {
  std::ostringstream out;
  out << source;
  if (d.line > 0) out << ':' << d.line << ':' << d.column;
  out << ": ";
  if (!d.path.empty()) out << '[' << d.path << "] ";
  out << d.message;
  return out.str();
}

namespace {

std::string summarize(ErrorKind kind, const std::string& source, const std::vector<Diagnostic>& ds) {
  std::string s = std::string(to_string(kind)) + " in " + source;
  for (const auto& d : ds) s += "\n  " + to_string(d, source);
  return s;
}

}  // namespace

ModelError::ModelError(ErrorKind kind, std::string source, std::vector<Diagnostic> diagnostics)
    : Error(kind, summarize(kind, source, diagnostics)),
      source_(std::move(source)),
      diagnostics_(std::move(diagnostics)) {}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string transition_path(const TotalTransition& t) {
  return "transition " + t.target + " " + t.source;
}

}  // namespace

std::vector<Problem> validate(const ModelDocument& doc) {
  const AtlasModel& m = doc.atlas;
  std::vector<Problem> out;
  auto problem = [&](std::string path, std::string msg) {
    out.push_back({std::move(path), std::move(msg)});
  };

  if (m.charts.empty()) problem("chart", "model declares no charts");
  const std::size_t n = m.base_dim();
  const std::size_t f = m.fiber_dim();

  std::set<std::string> ids, base_names;
  for (const auto& c : m.charts) {
    const std::string path = "chart " + c.id;
    if (!ids.insert(c.id).second) problem(path, "duplicate chart id '" + c.id + "'");
    if (c.coords.size() != n)
      problem(path + "/coords", "chart has " + std::to_string(c.coords.size()) +
                                    " coordinates, expected " + std::to_string(n));
    std::set<std::string> seen;
    for (const auto& x : c.coords) {
      if (!lexing::is_identifier(x)) problem(path + "/coords", "invalid coordinate name '" + x + "'");
      if (!seen.insert(x).second) problem(path + "/coords", "duplicate coordinate '" + x + "'");
      base_names.insert(x);
    }
    if (c.divisorial.size() != c.coords.size())
      problem(path + "/divisorial", "expected one flag per coordinate");
    if (c.log_pole.size() != c.coords.size())
      problem(path + "/logpole", "expected one flag per coordinate");
    for (std::size_t s = 0; s < std::min(c.divisorial.size(), c.log_pole.size()); ++s)
      if (c.log_pole[s] && !c.divisorial[s])
        problem(path + "/logpole", "log pole along non-divisorial coordinate '" +
                                       (s < c.coords.size() ? c.coords[s] : "?") + "'");
  }

  std::set<std::string> fiber_seen;
  for (const auto& name : m.fiber.names) {
    if (!lexing::is_identifier(name)) problem("fiber", "invalid fiber name '" + name + "'");
    if (!fiber_seen.insert(name).second) problem("fiber", "duplicate fiber name '" + name + "'");
    if (base_names.count(name))
      problem("fiber", "fiber name '" + name + "' clashes with a base coordinate");
  }
  if (m.fiber.central && !fiber_seen.count(*m.fiber.central))
    problem("central", "central coordinate '" + *m.fiber.central + "' is not a fiber name");

  if (!ids.count(m.reference)) problem("reference", "reference chart '" + m.reference + "' does not exist");

  std::set<ChartPair> pairs;
  for (const auto& t : m.transitions) {
    const std::string path = transition_path(t);
    if (!ids.count(t.target) || !ids.count(t.source)) {
      problem(path, "transition between unknown charts");
      continue;
    }
    if (t.target == t.source) problem(path, "transition from a chart to itself");
    if (pairs.count({t.source, t.target}) || !pairs.insert({t.target, t.source}).second)
      problem(path, "transition between charts " + t.target + " and " + t.source + " declared twice");
    const IntMatrix& e = t.base.exponents();
    if (e.rows() != n || e.cols() != n)
      problem(path + "/exponents", "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                       " exponent matrix");
    else if (!e.is_unimodular())
      problem(path + "/exponents", "exponent matrix " + to_string(e) +
                                       " is not unimodular (det " + e.determinant().get_str() + ")");
    if (t.twists.rows() != f || t.units.size() != f)
      problem(path + "/twist", "expected one twist row per fiber coordinate");
    else if (t.twists.cols() != n)
      problem(path + "/twist", "twist rows must have length " + std::to_string(n));
  }

  // Connectivity from the reference chart.
  if (ids.count(m.reference)) {
    std::set<std::string> reached{m.reference};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& t : m.transitions) {
        if (reached.count(t.source) && reached.insert(t.target).second) grew = true;
        if (reached.count(t.target) && reached.insert(t.source).second) grew = true;
      }
    }
    for (const auto& c : m.charts)
      if (!reached.count(c.id))
        problem("chart " + c.id, "chart is not connected to the reference chart by transitions");
  }

  if (m.local_system.base.size() != n)
    problem("local_system/base", "expected " + std::to_string(n) + " base exponents");
  if (m.local_system.fiber.size() != f)
    problem("local_system/fiber", "expected " + std::to_string(f) + " fiber exponents");
  for (const auto& form : m.local_system.flattened())
    for (const auto& [name, c] : form.coeffs())
      if (!m.params.contains(name)) problem("local_system", "undeclared parameter '" + name + "'");

  for (const auto& [p, map] : m.central_cocycle) {
    const std::string path = "linebundle_inverse " + p.first + " " + p.second;
    if (!ids.count(p.first) || !ids.count(p.second)) problem(path, "unknown chart");
    if (map.target_dim() != 1 || map.source_dim() != n)
      problem(path + "/exponents", "expected " + std::to_string(n) + " exponents");
  }

  std::set<std::string> fixture_names;
  for (const auto& v : doc.loop_vars) {
    if (v == "t") problem("loopgroup_vars", "'t' is reserved for the loop variable");
    if (!lexing::is_identifier(v)) problem("loopgroup_vars", "invalid variable name '" + v + "'");
  }
  for (const auto& fx : doc.fixtures) {
    const std::string path = "fixture " + fx.name;
    if (!fixture_names.insert(fx.name).second) problem(path, "duplicate fixture name");
    for (const auto* side : {&fx.left, &fx.right}) {
      const LaurentPoly det = side->determinant();
      const bool det_one = det.is_single_term() && det.terms().begin()->first == 0 &&
                           det.terms().begin()->second.is_one();
      if (!det_one)
        problem(path + (side == &fx.left ? "/left" : "/right"),
                "matrix determinant is " + to_string(det, doc.loop_vars) + ", expected 1");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string text;
  int column;
};

struct Statement {
  int line;
  Token keyword;
  std::vector<Token> args;
  std::string rest;  // text after the keyword
  int rest_column;
};

Statement split_line(int line, std::string_view text) {
  Statement st{line, {}, {}, {}, 0};
  std::size_t i = 0;
  std::vector<Token> tokens;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    tokens.push_back({std::string(text.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  st.keyword = tokens.front();
  st.args.assign(tokens.begin() + 1, tokens.end());
  const std::size_t after = static_cast<std::size_t>(st.keyword.column - 1) + st.keyword.text.size();
  std::size_t r = after;
  while (r < text.size() && std::isspace(static_cast<unsigned char>(text[r]))) ++r;
  st.rest = std::string(text.substr(r));
  while (!st.rest.empty() && std::isspace(static_cast<unsigned char>(st.rest.back()))) st.rest.pop_back();
  st.rest_column = static_cast<int>(r) + 1;
  return st;
}

/// "[[1,0],[0,1]]" or "[1,0]" (a single row when `single_row`).
std::vector<std::vector<Integer>> parse_int_rows(std::string_view text, bool single_row) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorKind::Parse, msg + " in integer list '" + std::string(text) + "'");
  };
  auto row = [&]() {
    std::vector<Integer> r;
    if (pos >= s.size() || s[pos] != '[') fail("expected '['");
    ++pos;
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return r;
    }
    while (true) {
      std::size_t start = pos;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string num = s.substr(start, pos - start);
      if (num.empty() || num == "-" || num == "+") fail("expected integer");
      if (num[0] == '+') num.erase(0, 1);
      r.emplace_back(num);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return r;
      }
      fail("expected ',' or ']'");
    }
  };
  std::vector<std::vector<Integer>> rows;
  if (single_row) {
    rows.push_back(row());
  } else {
    if (pos >= s.size() || s[pos] != '[') fail("expected '['");
    ++pos;
    while (true) {
      rows.push_back(row());
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  if (pos != s.size()) fail("trailing characters");
  return rows;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_flag(const std::string& s) {
  if (s == "1") return true;
  if (s == "0") return false;
  throw Error(ErrorKind::Parse, "flag must be 0 or 1, got '" + s + "'");
}

struct Location {
  int line;
  int column;
};

class ModelParser {
 public:
  ModelParser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  ModelDocument run() {
    read_statements();
    if (!diagnostics_.empty()) throw ModelError(ErrorKind::Parse, source_, diagnostics_);
    build();
    if (!diagnostics_.empty()) throw ModelError(ErrorKind::Parse, source_, diagnostics_);
    std::vector<Diagnostic> vd;
    for (const auto& p : validate(doc_)) {
      Location loc = locate(p.path);
      vd.push_back({loc.line, loc.column, p.path, p.message});
    }
    if (!vd.empty()) throw ModelError(ErrorKind::Validation, source_, vd);
    return doc_;
  }

 private:
  enum class Block { None, Chart, Transition, LocalSystem, Linebundle, Fixture };

  struct Pending {
    std::string path;
    Statement st;
  };

  void read_statements() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      statements_.push_back(split_line(line_no, raw));
    }
  }

  void error(const Statement& st, int column, const std::string& path, const std::string& msg) {
    diagnostics_.push_back({st.line, column, path, msg});
  }

  void note(const std::string& path, const Statement& st) {
    locations_.emplace(path, Location{st.line, st.keyword.column});
  }

  Location locate(const std::string& path) const {
    std::string p = path;
    while (true) {
      if (auto it = locations_.find(p); it != locations_.end()) return it->second;
      auto slash = p.rfind('/');
      if (slash == std::string::npos) return {0, 0};
      p.erase(slash);
    }
  }

  void build() {
    Block block = Block::None;
    std::string block_path;
    AtlasModel& m = doc_.atlas;
    std::vector<Pending> forms, fixtures_src;
    std::map<std::string, std::size_t> fiber_row_filled;

    for (const auto& st : statements_) {
      const std::string& kw = st.keyword.text;
      try {
        if (kw == "params") {
          block = Block::None;
          std::vector<std::string> names;
          for (const auto& a : st.args) names.push_back(a.text);
          m.params = ParamSpace(names);
          note("params", st);
        } else if (kw == "fiber" && block != Block::LocalSystem) {
          block = Block::None;
          for (const auto& a : st.args) m.fiber.names.push_back(a.text);
          note("fiber", st);
        } else if (kw == "central") {
          block = Block::None;
          expect_args(st, 1);
          m.fiber.central = st.args[0].text;
          note("central", st);
        } else if (kw == "reference") {
          block = Block::None;
          expect_args(st, 1);
          m.reference = st.args[0].text;
          note("reference", st);
        } else if (kw == "loopgroup_vars") {
          block = Block::None;
          for (const auto& a : st.args) doc_.loop_vars.push_back(a.text);
          note("loopgroup_vars", st);
        } else if (kw == "chart") {
          expect_args(st, 1);
          block = Block::Chart;
          m.charts.push_back({st.args[0].text, {}, {}, {}});
          block_path = "chart " + st.args[0].text;
          note(block_path, st);
        } else if (kw == "transition") {
          expect_args(st, 2);
          block = Block::Transition;
          TotalTransition t;
          t.target = st.args[0].text;
          t.source = st.args[1].text;
          m.transitions.push_back(std::move(t));
          pending_twists_.emplace_back();
          block_path = "transition " + st.args[0].text + " " + st.args[1].text;
          note(block_path, st);
        } else if (kw == "local_system") {
          expect_args(st, 0);
          block = Block::LocalSystem;
          block_path = "local_system";
          note(block_path, st);
        } else if (kw == "linebundle_inverse") {
          expect_args(st, 2);
          block = Block::Linebundle;
          current_pair_ = {st.args[0].text, st.args[1].text};
          linebundle_raw_[current_pair_] = {};
          block_path = "linebundle_inverse " + st.args[0].text + " " + st.args[1].text;
          note(block_path, st);
        } else if (kw == "fixture") {
          expect_args(st, 1);
          block = Block::Fixture;
          doc_.fixtures.emplace_back().name = st.args[0].text;
          block_path = "fixture " + st.args[0].text;
          fixture_index_[block_path] = doc_.fixtures.size() - 1;
          note(block_path, st);
        } else {
          attribute(block, block_path, st, forms, fixtures_src);
        }
      } catch (const Error& e) {
        error(st, st.keyword.column, block_path, e.what());
      }
    }

    // Deferred: local-system forms need the parameter list, fixtures the
    // loop variables; twist rows need the fiber order.
    for (const auto& p : forms) {
      try {
        std::vector<LinearForm> list;
        for (const auto& piece : split_commas(p.st.rest)) list.push_back(parse_linear_form(piece, m.params));
        if (p.st.keyword.text == "base")
          m.local_system.base = std::move(list);
        else
          m.local_system.fiber = std::move(list);
      } catch (const Error& e) {
        error(p.st, p.st.rest_column, p.path, e.what());
      }
    }
    exponents_.resize(m.transitions.size());
    coeffs_.resize(m.transitions.size());
    for (std::size_t k = 0; k < m.transitions.size(); ++k) assemble_twists(k);
    for (auto& [pair, raw] : linebundle_raw_) {
      if (!raw.exponents) continue;
      m.central_cocycle.emplace(pair, MonomialMap({raw.coeff}, IntMatrix::from_rows({*raw.exponents})));
    }
    for (const auto& p : fixtures_src) {
      try {
        LoopPolyMatrix mat = parse_loop_matrix(p.st.rest, doc_.loop_vars);
        auto& fx = doc_.fixtures[fixture_index_.at(p.path)];
        (p.st.keyword.text == "left" ? fx.left : fx.right) = std::move(mat);
      } catch (const Error& e) {
        error(p.st, p.st.rest_column, p.path, e.what());
      }
    }
  }

  void attribute(Block block, const std::string& block_path, const Statement& st,
                 std::vector<Pending>& forms, std::vector<Pending>& fixtures_src) {
    const std::string& kw = st.keyword.text;
    const std::string path = block_path + "/" + kw;
    AtlasModel& m = doc_.atlas;
    switch (block) {
      case Block::Chart: {
        Chart& c = m.charts.back();
        if (kw == "coords") {
          for (const auto& a : st.args) c.coords.push_back(a.text);
        } else if (kw == "divisorial" || kw == "logpole") {
          auto& flags = kw == "divisorial" ? c.divisorial : c.log_pole;
          for (const auto& a : st.args) flags.push_back(parse_flag(a.text));
        } else {
          throw unknown(kw, "chart");
        }
        note(path, st);
        return;
      }
      case Block::Transition: {
        if (kw == "exponents") {
          exponents_.resize(m.transitions.size());
          exponents_.back() = IntMatrix::from_rows(parse_int_rows(st.rest, false));
          rebuild_base(m.transitions.size() - 1);
        } else if (kw == "coeffs") {
          coeffs_.resize(m.transitions.size());
          for (const auto& a : st.args) coeffs_.back().push_back(parse_rational(a.text));
          rebuild_base(m.transitions.size() - 1);
        } else if (kw == "twist") {
          if (st.args.size() < 2) throw Error(ErrorKind::Parse, "twist needs: name [row] [unit]");
          // "twist a [-1,0] 1": name, row (may contain spaces), optional unit.
          std::string rest = st.rest.substr(st.args[0].text.size());
          auto close = rest.find(']');
          if (close == std::string::npos) throw Error(ErrorKind::Parse, "twist row must be [..]");
          auto row = parse_int_rows(rest.substr(0, close + 1), true).front();
          std::string unit = rest.substr(close + 1);
          Rational u = unit.find_first_not_of(" \t") == std::string::npos ? Rational(1) : parse_rational(unit);
          if (u == 0) throw Error(ErrorKind::Parse, "twist unit must be nonzero");
          pending_twists_.back().push_back({st.args[0].text, std::move(row), u, st});
        } else {
          throw unknown(kw, "transition");
        }
        note(path, st);
        return;
      }
      case Block::LocalSystem:
        if (kw != "base" && kw != "fiber") throw unknown(kw, "local_system");
        forms.push_back({path, st});
        note(path, st);
        return;
      case Block::Linebundle: {
        auto& raw = linebundle_raw_[current_pair_];
        if (kw == "exponents")
          raw.exponents = parse_int_rows(st.rest, true).front();
        else if (kw == "coeff")
          raw.coeff = parse_rational(st.rest);
        else
          throw unknown(kw, "linebundle_inverse");
        if (raw.coeff == 0) throw Error(ErrorKind::Parse, "coefficient must be nonzero");
        note(path, st);
        return;
      }
      case Block::Fixture: {
        LoopFixture& fx = doc_.fixtures.back();
        if (kw == "subgroup") {
          expect_args(st, 1);
          if (st.args[0].text == "I")
            fx.subgroup = Subgroup::Iwahori;
          else if (st.args[0].text == "Iu")
            fx.subgroup = Subgroup::IwahoriUnipotent;
          else
            throw Error(ErrorKind::Parse, "subgroup must be I or Iu");
        } else if (kw == "expect") {
          expect_args(st, 1);
          if (st.args[0].text != "yes" && st.args[0].text != "no")
            throw Error(ErrorKind::Parse, "expect must be yes or no");
          fx.expected = st.args[0].text == "yes";
        } else if (kw == "left" || kw == "right") {
          fixtures_src.push_back({block_path, st});
        } else {
          throw unknown(kw, "fixture");
        }
        note(path, st);
        return;
      }
      case Block::None:
        throw Error(ErrorKind::Parse, "unknown statement '" + kw + "'");
    }
  }

  void rebuild_base(std::size_t k) {
    exponents_.resize(doc_.atlas.transitions.size());
    coeffs_.resize(doc_.atlas.transitions.size());
    const IntMatrix& e = exponents_[k];
    std::vector<Rational> c = coeffs_[k];
    if (c.empty()) c.assign(e.rows(), Rational(1));
    if (c.size() != e.rows()) return;  // reported once both are present
    doc_.atlas.transitions[k].base = MonomialMap(std::move(c), e);
  }

  void assemble_twists(std::size_t k) {
    TotalTransition& t = doc_.atlas.transitions[k];
    const auto& names = doc_.atlas.fiber.names;
    const std::size_t n = t.base.source_dim();
    if (!coeffs_[k].empty() && coeffs_[k].size() != exponents_[k].rows())
      diagnostics_.push_back({locate("transition " + t.target + " " + t.source + "/coeffs").line,
                              locate("transition " + t.target + " " + t.source + "/coeffs").column,
                              "transition " + t.target + " " + t.source + "/coeffs",
                              "expected one coefficient per exponent row"});
    t.twists = IntMatrix(names.size(), n);
    t.units.assign(names.size(), Rational(1));
    std::vector<bool> filled(names.size(), false);
    for (const auto& tw : pending_twists_[k]) {
      auto it = std::find(names.begin(), names.end(), tw.name);
      const std::string path = "transition " + t.target + " " + t.source + "/twist";
      if (it == names.end()) {
        error(tw.st, tw.st.rest_column, path, "unknown fiber coordinate '" + tw.name + "'");
        continue;
      }
      const auto r = static_cast<std::size_t>(it - names.begin());
      if (filled[r]) error(tw.st, tw.st.rest_column, path, "twist for '" + tw.name + "' given twice");
      if (tw.row.size() != n) {
        error(tw.st, tw.st.rest_column, path,
              "twist row has length " + std::to_string(tw.row.size()) + ", expected " + std::to_string(n));
        continue;
      }
      filled[r] = true;
      for (std::size_t s = 0; s < n; ++s) t.twists.at(r, s) = tw.row[s];
      t.units[r] = tw.unit;
    }
    for (std::size_t r = 0; r < names.size(); ++r)
      if (!filled[r]) {
        Location loc = locate("transition " + t.target + " " + t.source);
        diagnostics_.push_back({loc.line, loc.column, "transition " + t.target + " " + t.source + "/twist",
                                "missing twist for fiber coordinate '" + names[r] + "'"});
      }
  }

  static void expect_args(const Statement& st, std::size_t n) {
    if (st.args.size() != n)
      throw Error(ErrorKind::Parse, "'" + st.keyword.text + "' takes " + std::to_string(n) +
                                        " argument(s), got " + std::to_string(st.args.size()));
  }

  static Error unknown(const std::string& kw, const std::string& block) {
    return Error(ErrorKind::Parse, "unknown attribute '" + kw + "' in " + block + " block");
  }

  struct RawTwist {
    std::string name;
    std::vector<Integer> row;
    Rational unit;
    Statement st;
  };
  struct RawLinebundle {
    std::optional<std::vector<Integer>> exponents;
    Rational coeff = 1;
  };

  std::string_view text_;
  std::string source_;
  std::vector<Statement> statements_;
  std::vector<Diagnostic> diagnostics_;
  std::map<std::string, Location> locations_;
  ModelDocument doc_;
  std::vector<IntMatrix> exponents_;
  std::vector<std::vector<Rational>> coeffs_;
  std::vector<std::vector<RawTwist>> pending_twists_;
  std::map<ChartPair, RawLinebundle> linebundle_raw_;
  ChartPair current_pair_;
  std::map<std::string, std::size_t> fixture_index_;
};

}  // namespace

ModelDocument parse_model(std::string_view text, std::string_view source) {
  return ModelParser(text, std::string(source)).run();
}

ModelDocument load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ModelError(ErrorKind::Parse, path, {{0, 0, "", "cannot open file"}});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string flags(const std::vector<bool>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::string(v[i] ? "1" : "0");
  return s;
}

std::string int_row(const std::vector<Integer>& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i].get_str();
  return s + "]";
}

}  // namespace

std::string serialize(const ModelDocument& doc) {
  const AtlasModel& m = doc.atlas;
  std::ostringstream out;
  out << "params " << join(m.params.names()) << '\n';
  out << "fiber " << join(m.fiber.names) << '\n';
  if (m.fiber.central) out << "central " << *m.fiber.central << '\n';
  out << "reference " << m.reference << '\n';
  for (const auto& c : m.charts) {
    out << "\nchart " << c.id << '\n';
    out << "  coords " << join(c.coords) << '\n';
    out << "  divisorial " << flags(c.divisorial) << '\n';
    out << "  logpole " << flags(c.log_pole) << '\n';
  }
  for (const auto& t : m.transitions) {
    out << "\ntransition " << t.target << ' ' << t.source << '\n';
    out << "  exponents " << to_string(t.base.exponents()) << '\n';
    std::vector<std::string> cs;
    for (const auto& c : t.base.coeffs()) cs.push_back(c.get_str());
    out << "  coeffs " << join(cs) << '\n';
    for (std::size_t r = 0; r < t.fiber_dim(); ++r)
      out << "  twist " << m.fiber.names[r] << ' ' << int_row(t.twists.row(r)) << ' '
          << t.units[r].get_str() << '\n';
  }
  out << "\nlocal_system\n";
  std::vector<std::string> base, fiber;
  for (const auto& f : m.local_system.base) base.push_back(to_string(f, m.params));
  for (const auto& f : m.local_system.fiber) fiber.push_back(to_string(f, m.params));
  out << "  base " << join(base, ", ") << '\n';
  if (!fiber.empty()) out << "  fiber " << join(fiber, ", ") << '\n';
  for (const auto& [p, map] : m.central_cocycle) {
    out << "\nlinebundle_inverse " << p.first << ' ' << p.second << '\n';
    out << "  exponents " << int_row(map.exponents().row(0)) << '\n';
    out << "  coeff " << map.coeffs()[0].get_str() << '\n';
  }
  if (!doc.loop_vars.empty() || !doc.fixtures.empty())
    out << "\nloopgroup_vars " << join(doc.loop_vars) << '\n';
  for (const auto& fx : doc.fixtures) {
    out << "\nfixture " << fx.name << '\n';
    out << "  subgroup " << to_string(fx.subgroup) << '\n';
    out << "  expect " << (fx.expected ? "yes" : "no") << '\n';
    out << "  left " << to_string(fx.left, doc.loop_vars) << '\n';
    out << "  right " << to_string(fx.right, doc.loop_vars) << '\n';
  }
  return out.str();
}

}  // namespace flagclean
