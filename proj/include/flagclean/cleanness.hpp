#pragma once

#include <string>
#include <vector>

#include "flagclean/atlas.hpp"
#include "flagclean/linear_form.hpp"

namespace flagclean {

/// One boundary divisor {coordinate = 0} of a chart together with the
/// normalized exponent of the local system along it.
struct BoundaryForm {
  std::string chart;
  std::string coordinate;
  LinearForm form;

  bool operator==(const BoundaryForm&) const = default;
};

struct Witness {
  std::string chart;
  std::string coordinate;

  bool operator==(const Witness&) const = default;
};

struct CriterionEntry {
  LinearForm form;
  std::vector<Witness> witnesses;

  bool operator==(const CriterionEntry&) const = default;
};

/// Clean iff no form takes an integral value. Forms are normalized and
/// pairwise distinct; entries are ordered by their first witness (chart
/// order, then coordinate order).
struct Criterion {
  ParamSpace params;
  std::vector<CriterionEntry> entries;

  std::vector<LinearForm> forms() const;
};

struct FormValue {
  LinearForm form;
  Rational value;
};

struct Verdict {
  bool clean = true;
  std::vector<FormValue> values;
  std::vector<FormValue> violated;
};

/// Exponents of the local system in chart i: the reference exponents pulled
/// back along Psi_{reference,i}.
ExponentVector chart_exponents(const AtlasModel& model, const std::string& chart);

/// One entry per divisorial base coordinate of every chart.
std::vector<BoundaryForm> boundary_forms(const AtlasModel& model);

Criterion criterion(const AtlasModel& model);

/// Substitutes values for some parameters, then re-normalizes and merges
/// forms that became equivalent.
Criterion specialize(const Criterion& crit, const Assignment& partial);

Verdict evaluate(const Criterion& crit, const Assignment& assignment);
Verdict evaluate_clean(const AtlasModel& model, const Assignment& assignment);

}  // namespace flagclean
