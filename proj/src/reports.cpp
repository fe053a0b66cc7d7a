#include "flagclean/reports.hpp"

#include <sstream>

namespace flagclean {

namespace {

Json int_array(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_long(z));
  return a;
}

Json matrix_array(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(int_array(m.row(r)));
  return a;
}

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json assignment_object(const Assignment& a, const ParamSpace& space) {
  Json o = Json::object();
  for (const auto& name : space.names())
    if (auto it = a.find(name); it != a.end()) o[name] = to_string(it->second);
  return o;
}

Json form_object(const LinearForm& f, const ParamSpace& space) {
  Json coeffs = Json::object();
  for (const auto& name : space.names())
    if (Rational c = f.coeff(name); c != 0) coeffs[name] = to_string(c);
  return {{"form", to_string(f, space)}, {"coefficients", coeffs}, {"constant", to_string(f.constant())}};
}

std::string chart_pair_label(const std::string& i, const std::string& j) {
  return i.size() == 1 && j.size() == 1 ? i + j : "{" + i + "," + j + "}";
}

std::string tuple_text(const Json& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ", ";
    s += a[k].is_string() ? a[k].get<std::string>() : a[k].dump();
  }
  return s + ")";
}

/// "c0 + c1*t + ... + O(t^P)" for a truncated series.
std::string series_text(const LaurentSeries& s, const std::vector<std::string>& names) {
  LaurentPoly p(s.nvars());
  for (int k = s.valuation(); k < s.precision(); ++k)
    if (auto c = s.coefficient(k); c && !c->is_zero()) p = p + LaurentPoly::monomial(*c, k);
  std::string text = p.is_zero() ? "" : to_string(p, names) + " + ";
  return text + "O(t^" + std::to_string(s.precision()) + ")";
}

std::vector<std::string> total_names(const AtlasModel& m, const std::string& chart) {
  std::vector<std::string> names = m.chart(chart).coords;
  names.insert(names.end(), m.fiber.names.begin(), m.fiber.names.end());
  return names;
}

Json linebundle_entries(const AtlasModel& model, const LineBundleReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    const auto& names = model.chart(e.i).coords;
    Json o{{"i", e.i},
           {"j", e.j},
           {"derived", format_monomial(e.derived.coeffs()[0], e.derived.exponents().row(0), names)},
           {"exponents", int_array(e.derived.exponents().row(0))},
           {"from_twist", e.from_twist ? int_array(*e.from_twist) : Json(nullptr)},
           {"declared", e.declared ? int_array(*e.declared) : Json(nullptr)},
           {"ok", e.ok}};
    entries.push_back(std::move(o));
  }
  return entries;
}

std::string linebundle_lines(const Json& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << "t_" << chart_pair_label(e["i"], e["j"]) << "^-1 = " << e["derived"].get<std::string>();
    if (!e["from_twist"].is_null()) out << "  twist " << tuple_text(e["from_twist"]);
    if (!e["declared"].is_null()) out << "  declared " << tuple_text(e["declared"]);
    out << "  " << (e["ok"].get<bool>() ? "ok" : "MISMATCH") << '\n';
  }
  return out.str();
}

}  // namespace

std::string agreement_percent(std::uint64_t agreements, std::uint64_t cases) {
  if (agreements == cases) return "100";
  const auto hundredths = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(agreements) * 10000 / cases);
  std::ostringstream out;
  out << hundredths / 100 << '.' << (hundredths % 100 < 10 ? "0" : "") << hundredths % 100;
  return out.str();
}

// --- derive -----------------------------------------------------------------

Json derive_report(const Criterion& crit) {
  Json forms = Json::array();
  for (const auto& e : crit.entries) {
    Json o = form_object(e.form, crit.params);
    Json ws = Json::array();
    for (const auto& w : e.witnesses) ws.push_back({{"chart", w.chart}, {"coordinate", w.coordinate}});
    o["witnesses"] = std::move(ws);
    forms.push_back(std::move(o));
  }
  return {{"params", crit.params.names()}, {"forms", std::move(forms)}};
}

std::string render_derive(const Json& r, bool witnesses) {
  std::ostringstream out;
  for (const auto& f : r["forms"]) {
    out << f["form"].get<std::string>();
    if (witnesses) {
      out << "  [";
      bool first = true;
      for (const auto& w : f["witnesses"]) {
        out << (first ? "" : ", ") << "chart " << w["chart"].get<std::string>() << ": "
            << w["coordinate"].get<std::string>();
        first = false;
      }
      out << ']';
    }
    out << '\n';
  }
  return out.str();
}

// --- check ------------------------------------------------------------------

Json check_report(const Criterion& crit, const Verdict& verdict) {
  Json values = Json::array();
  for (const auto& v : verdict.values)
    values.push_back({{"form", to_string(v.form, crit.params)},
                      {"value", to_string(v.value)},
                      {"integral", is_integer(v.value)}});
  return {{"clean", verdict.clean}, {"values", std::move(values)}};
}

std::string render_check(const Json& r) {
  std::ostringstream out;
  out << (r["clean"].get<bool>() ? "CLEAN" : "NOT CLEAN") << '\n';
  for (const auto& v : r["values"]) {
    out << "  " << v["form"].get<std::string>() << " = " << v["value"].get<std::string>();
    if (v["integral"].get<bool>()) out << "  (integral)";
    out << '\n';
  }
  return out.str();
}

// --- transitions -------------------------------------------------------------

Json transitions_report(const AtlasModel& model) {
  Json list = Json::array();
  for (std::size_t a = 0; a < model.charts.size(); ++a)
    for (std::size_t b = a + 1; b < model.charts.size(); ++b) {
      const std::string& i = model.charts[a].id;
      const std::string& j = model.charts[b].id;
      const TotalTransition t = transition(model, i, j);
      list.push_back({{"target", i},
                      {"source", j},
                      {"map", format_map(t.full(), total_names(model, j))},
                      {"base_exponents", matrix_array(t.base.exponents())},
                      {"base_coeffs", rational_array(t.base.coeffs())},
                      {"twists", matrix_array(t.twists)},
                      {"units", rational_array(t.units)}});
    }
  return {{"transitions", std::move(list)}};
}

std::string render_transitions(const Json& r) {
  std::ostringstream out;
  for (const auto& t : r["transitions"])
    out << "Psi_" << chart_pair_label(t["target"], t["source"]) << ": " << t["map"].get<std::string>()
        << '\n';
  return out.str();
}

// --- linebundle --------------------------------------------------------------

Json linebundle_report(const AtlasModel& model, const LineBundleReport& report) {
  return {{"entries", linebundle_entries(model, report)}, {"ok", report.ok()}};
}

std::string render_linebundle(const Json& r) {
  return linebundle_lines(r["entries"]) + "line bundle: " + (r["ok"].get<bool>() ? "ok" : "FAILED") + '\n';
}

// --- oracle -------------------------------------------------------------------

Json oracle_simple_report(const std::vector<Rational>& mu, std::int64_t window, bool simple) {
  return {{"mu", rational_array(mu)}, {"window", window}, {"simple", simple}};
}

std::string render_oracle_simple(const Json& r) {
  return std::string(r["simple"].get<bool>() ? "simple" : "not simple") + '\n';
}

Json oracle_clean_report(const AtlasModel& model, const Assignment& assignment, std::int64_t window,
                         const OracleAgreement& agreement) {
  Json charts = Json::array();
  for (const auto& c : agreement.charts)
    charts.push_back({{"chart", c.chart},
                      {"coords", c.coords},
                      {"exponents", rational_array(c.exponents)},
                      {"clean", c.clean}});
  return {{"assignment", assignment_object(assignment, model.params)},
          {"window", window},
          {"charts", std::move(charts)},
          {"oracle_clean", agreement.oracle_clean},
          {"criterion_clean", agreement.criterion.clean},
          {"agree", agreement.agree()}};
}

std::string render_oracle_clean(const Json& r) {
  std::ostringstream out;
  for (const auto& c : r["charts"])
    out << "chart " << c["chart"].get<std::string>() << ": exponents " << tuple_text(c["exponents"])
        << ' ' << (c["clean"].get<bool>() ? "clean" : "not clean") << '\n';
  out << "oracle: " << (r["oracle_clean"].get<bool>() ? "CLEAN" : "NOT CLEAN") << '\n';
  out << "criterion: " << (r["criterion_clean"].get<bool>() ? "CLEAN" : "NOT CLEAN") << '\n';
  out << (r["agree"].get<bool>() ? "agree" : "DISAGREE") << '\n';
  return out.str();
}

Json oracle_grid_report(const AtlasModel& model, std::int64_t denominator_bound, std::int64_t range,
                        std::int64_t window, const GridReport& report) {
  Json dis = Json::array();
  for (const auto& d : report.disagreements)
    dis.push_back({{"assignment", assignment_object(d.assignment, model.params)},
                   {"oracle_clean", d.report.oracle_clean},
                   {"criterion_clean", d.report.criterion.clean}});
  return {{"denominator_bound", denominator_bound},
          {"range", range},
          {"window", window},
          {"grid_size", report.grid_size},
          {"cases", report.cases},
          {"agreements", report.agreements},
          {"clean_cases", report.clean_cases},
          {"agreement_percent", agreement_percent(report.agreements, report.cases)},
          {"disagreements", std::move(dis)}};
}

std::string render_oracle_grid(const Json& r) {
  std::ostringstream out;
  out << "grid points " << r["grid_size"].get<std::uint64_t>() << ", cases "
      << r["cases"].get<std::uint64_t>() << ", clean " << r["clean_cases"].get<std::uint64_t>() << '\n';
  for (const auto& d : r["disagreements"]) {
    out << "disagreement at";
    for (const auto& [name, value] : d["assignment"].items()) out << ' ' << name << '=' << value.get<std::string>();
    out << ": oracle " << (d["oracle_clean"].get<bool>() ? "clean" : "not clean") << ", criterion "
        << (d["criterion_clean"].get<bool>() ? "clean" : "not clean") << '\n';
  }
  out << "agreement " << r["agreement_percent"].get<std::string>() << "%\n";
  return out.str();
}

// --- verify -------------------------------------------------------------------

Json verify_report(const ModelDocument& doc, const CocycleReport& cocycles,
                   const LineBundleReport& linebundle, const FixtureReport& fixtures) {
  const AtlasModel& m = doc.atlas;
  Json failures = Json::array();
  for (const auto& f : cocycles.failures)
    failures.push_back({{"i", f.i},
                        {"j", f.j},
                        {"k", f.k},
                        {"direct", format_map(f.direct.full(), total_names(m, f.k))},
                        {"composed", format_map(f.composed.full(), total_names(m, f.k))}});
  Json fx = Json::array();
  for (const auto& r : fixtures.results) {
    const auto& v = r.verdict.membership;
    Json cert = nullptr;
    if (v.certificate)
      cert = {{"row", v.certificate->row},
              {"col", v.certificate->col},
              {"power", v.certificate->power},
              {"reason", v.certificate->reason}};
    Json dens = Json::array();
    for (const auto& d : v.denominators) dens.push_back(to_string(d, doc.loop_vars));
    Json quotient = Json::array();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) quotient.push_back(series_text(r.verdict.quotient.at(i, j), doc.loop_vars));
    const auto it = std::find_if(doc.fixtures.begin(), doc.fixtures.end(),
                                 [&](const LoopFixture& f) { return f.name == r.name; });
    fx.push_back({{"name", r.name},
                  {"subgroup", it != doc.fixtures.end() ? to_string(it->subgroup) : ""},
                  {"expected", r.expected ? "yes" : "no"},
                  {"verdict", to_string(v.status)},
                  {"precision", r.precision},
                  {"pass", r.pass},
                  {"certificate", std::move(cert)},
                  {"denominators", std::move(dens)},
                  {"quotient", std::move(quotient)}});
  }
  const bool ok = cocycles.ok() && linebundle.ok() && fixtures.ok();
  return {{"cocycles", {{"triangles", cocycles.triangles.size()}, {"failures", std::move(failures)}, {"ok", cocycles.ok()}}},
          {"linebundle", {{"entries", linebundle_entries(m, linebundle)}, {"ok", linebundle.ok()}}},
          {"fixtures", {{"results", std::move(fx)}, {"ok", fixtures.ok()}}},
          {"ok", ok}};
}

std::string render_verify(const Json& r) {
  std::ostringstream out;
  const auto& c = r["cocycles"];
  out << "cocycles: " << c["triangles"].get<std::size_t>() << " triangles, " << c["failures"].size()
      << " failures\n";
  for (const auto& f : c["failures"])
    out << "  Psi_" << chart_pair_label(f["i"], f["k"]) << " != Psi_" << chart_pair_label(f["i"], f["j"])
        << " o Psi_" << chart_pair_label(f["j"], f["k"]) << "\n    direct   " << f["direct"].get<std::string>()
        << "\n    composed " << f["composed"].get<std::string>() << '\n';
  out << linebundle_lines(r["linebundle"]["entries"]);
  out << "line bundle: " << (r["linebundle"]["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
  for (const auto& f : r["fixtures"]["results"]) {
    out << "fixture " << f["name"].get<std::string>() << " (" << f["subgroup"].get<std::string>()
        << "): " << f["verdict"].get<std::string>() << ", expected " << f["expected"].get<std::string>()
        << ", N=" << f["precision"].get<int>() << "  " << (f["pass"].get<bool>() ? "pass" : "FAIL");
    if (!f["certificate"].is_null())
      out << "  [entry (" << f["certificate"]["row"].get<int>() << "," << f["certificate"]["col"].get<int>()
          << ") t^" << f["certificate"]["power"].get<int>() << ": "
          << f["certificate"]["reason"].get<std::string>() << "]";
    out << '\n';
  }
  out << (r["ok"].get<bool>() ? "verify: ok" : "verify: FAILED") << '\n';
  return out.str();
}

}  // namespace flagclean
