#include "flagclean/cleanness.hpp"

#include "flagclean/error.hpp"

namespace flagclean {

std::vector<LinearForm> Criterion::forms() const {
  std::vector<LinearForm> out;
  for (const auto& e : entries) out.push_back(e.form);
  return out;
}

ExponentVector chart_exponents(const AtlasModel& model, const std::string& chart) {
  const TotalTransition t = transition(model, model.reference, chart);
  std::vector<LinearForm> pulled = pullback_exponents(t.full(), model.local_system.flattened());
  const auto split = pulled.begin() + static_cast<std::ptrdiff_t>(model.base_dim());
  return {{pulled.begin(), split}, {split, pulled.end()}};
}

std::vector<BoundaryForm> boundary_forms(const AtlasModel& model) {
  std::vector<BoundaryForm> out;
  for (const auto& chart : model.charts) {
    ExponentVector exps = chart_exponents(model, chart.id);
    for (std::size_t s = 0; s < chart.coords.size(); ++s)
      if (chart.divisorial[s])
        out.push_back({chart.id, chart.coords[s], normalize(exps.base[s], model.params)});
  }
  return out;
}

namespace {

void add_entry(std::vector<CriterionEntry>& entries, const LinearForm& form,
               const std::vector<Witness>& witnesses) {
  for (auto& e : entries)
    if (e.form == form) {
      e.witnesses.insert(e.witnesses.end(), witnesses.begin(), witnesses.end());
      return;
    }
  entries.push_back({form, witnesses});
}

}  // namespace

Criterion criterion(const AtlasModel& model) {
  Criterion crit{model.params, {}};
  for (const auto& b : boundary_forms(model))
    add_entry(crit.entries, b.form, {{b.chart, b.coordinate}});
  return crit;
}

Criterion specialize(const Criterion& crit, const Assignment& partial) {
  Criterion out{crit.params, {}};
  for (const auto& e : crit.entries)
    add_entry(out.entries, normalize(substitute(e.form, partial), crit.params), e.witnesses);
  return out;
}

Verdict evaluate(const Criterion& crit, const Assignment& assignment) {
  Verdict v;
  for (const auto& e : crit.entries) {
    FormValue fv{e.form, evaluate(e.form, assignment)};
    if (is_integer(fv.value)) v.violated.push_back(fv);
    v.values.push_back(std::move(fv));
  }
  v.clean = v.violated.empty();
  return v;
}

Verdict evaluate_clean(const AtlasModel& model, const Assignment& assignment) {
  for (const auto& name : model.params.names())
    if (!assignment.count(name))
      throw Error(ErrorKind::MissingParameter, "no value assigned to parameter '" + name + "'");
  return evaluate(criterion(model), assignment);
}

}  // namespace flagclean
