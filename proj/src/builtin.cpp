#include "flagclean/model_file.hpp"

namespace flagclean {

namespace {

TotalTransition psi(std::string target, std::string source, IntMatrix e, IntMatrix twists) {
  return {std::move(target), std::move(source), MonomialMap({1, 1}, std::move(e)), std::move(twists), {1, 1}};
}

LoopPolyMatrix matrix(const std::string& text, const std::vector<std::string>& vars) {
  return parse_loop_matrix(text, vars);
}

}  // namespace

AtlasModel builtin_sl2() {
  AtlasModel m;
  m.params = ParamSpace({"mu_-1", "mu_0", "Lambda", "kappa"});
  m.fiber = {{"a", "v"}, std::string("v")};
  m.reference = "1";
  m.charts = {
      {"1", {"x", "y"}, {true, true}, {false, false}},
      {"2", {"x", "y"}, {true, true}, {true, false}},
      {"3", {"x", "y"}, {true, true}, {false, true}},
      {"4", {"x", "y"}, {true, true}, {true, true}},
  };
  // Rows of each twist matrix: a, then v.
  m.transitions = {
      psi("1", "2", {{-1, 0}, {-2, 1}}, {{-1, 0}, {-3, 0}}),
      psi("1", "3", {{1, 0}, {0, -1}}, {{0, -1}, {0, -1}}),
      psi("1", "4", {{-1, 0}, {-2, -1}}, {{-1, -1}, {-3, -1}}),
      psi("2", "3", {{-1, 0}, {-2, -1}}, {{-1, -1}, {-3, -1}}),
      psi("2", "4", {{1, 0}, {0, -1}}, {{0, -1}, {0, -1}}),
      psi("3", "4", {{-1, 0}, {2, 1}}, {{1, 0}, {-1, 0}}),
  };
  const auto form = [&](const char* name) { return LinearForm::param(name); };
  m.local_system = {{form("mu_-1"), form("mu_0")}, {form("Lambda"), form("kappa")}};
  m.central_cocycle = {
      {{"1", "2"}, MonomialMap({1}, {{-3, 0}})},
      {{"1", "3"}, MonomialMap({1}, {{0, -1}})},
      {{"1", "4"}, MonomialMap({1}, {{-1, -1}})},
  };
  return m;
}

ModelDocument builtin_document() {
  ModelDocument doc;
  doc.atlas = builtin_sl2();
  doc.loop_vars = {"a_-1", "a_0"};
  const auto& v = doc.loop_vars;
  const std::string g = "[[t, a_-1*t^-1 + a_0], [0, t^-1]]";
  auto add = [&](std::string name, const std::string& left, const std::string& right, Subgroup s,
                 bool expected) {
    doc.fixtures.push_back({std::move(name), matrix(left, v), matrix(right, v), s, expected});
  };
  // Each chart section family, twisted by its diagonal f_i, lies in the
  // I^u-coset of the open-cell family.
  add("chart1_section", g, g, Subgroup::IwahoriUnipotent, true);
  add("chart2_section", g + " * [[a_-1, 0], [0, 1/a_-1]]",
      "[[0, t^-1], [-t, 1/a_-1*t^-1 - a_0/a_-1^2]]", Subgroup::IwahoriUnipotent, true);
  add("chart3_section", g + " * [[a_0, 0], [0, 1/a_0]]",
      "[[-a_-1, 1 + a_-1/a_0*t^-1], [-1, 1/a_0*t^-1]]", Subgroup::IwahoriUnipotent, true);
  add("chart4_section", g + " * [[a_0/a_-1, 0], [0, a_-1/a_0]]",
      "[[-1, a_-1^2/a_0*t^-1], [-1/a_-1, a_-1/a_0*t^-1 - 1]]", Subgroup::IwahoriUnipotent, true);
  add("chart2_untwisted", g, "[[0, t^-1], [-t, 1/a_-1*t^-1 - a_0/a_-1^2]]",
      Subgroup::IwahoriUnipotent, false);
  add("chart2_iwahori", g, "[[0, t^-1], [-t, 1/a_-1*t^-1 - a_0/a_-1^2]]", Subgroup::Iwahori, true);
  // Limit families and their regularizations.
  add("limit_upper", "[[1, a_-1*t^-1], [0, 1]]", "[[0, t^-1], [-t, 1/a_-1]]", Subgroup::Iwahori, true);
  add("limit_open", "[[t, a_-1*t^-1], [0, t^-1]]", "[[0, t^-1], [-t, 1/a_-1*t^-1]]",
      Subgroup::Iwahori, true);
  add("limit_a0", "[[t, a_0], [0, t^-1]]", "[[0, 1], [-1, 1/a_0*t^-1]]", Subgroup::Iwahori, true);
  add("limit_finite", "[[a_0, 1], [-1, 0]]", "[[1, 0], [-1/a_0, 1]]", Subgroup::Iwahori, true);
  add("distinct_limits", "[[1, a_-1*t^-1], [0, 1]]", "[[t, a_-1*t^-1], [0, t^-1]]", Subgroup::Iwahori,
      false);
  return doc;
}

}  // namespace flagclean
