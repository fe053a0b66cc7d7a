#include "flagclean/atlas.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flagclean/error.hpp"

namespace flagclean {

MonomialMap TotalTransition::full() const {
  const std::size_t n = base_dim();
  const std::size_t f = fiber_dim();
  IntMatrix m(n + f, n + f);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = base.exponents().at(r, c);
  for (std::size_t r = 0; r < f; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.at(n + r, c) = twists.at(r, c);
    m.at(n + r, n + r) = 1;
  }
  std::vector<Rational> coeffs = base.coeffs();
  coeffs.insert(coeffs.end(), units.begin(), units.end());
  return {std::move(coeffs), std::move(m)};
}

TotalTransition TotalTransition::from_full(std::string target, std::string source,
                                           const MonomialMap& full, std::size_t base_dim) {
  const std::size_t total = full.source_dim();
  if (full.target_dim() != total || base_dim > total)
    throw Error(ErrorKind::DimensionMismatch, "total transition must be square");
  const std::size_t f = total - base_dim;
  const IntMatrix& m = full.exponents();
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = base_dim; c < total; ++c) {
      const bool block_ok = r < base_dim ? m.at(r, c) == 0 : m.at(r, c) == (r == c ? 1 : 0);
      if (!block_ok)
        throw Error(ErrorKind::InvalidArgument,
                    "map does not have the block form [[E,0],[W,I]]: " + to_string(m));
    }
  IntMatrix e(base_dim, base_dim), w(f, base_dim);
  for (std::size_t r = 0; r < base_dim; ++r)
    for (std::size_t c = 0; c < base_dim; ++c) e.at(r, c) = m.at(r, c);
  for (std::size_t r = 0; r < f; ++r)
    for (std::size_t c = 0; c < base_dim; ++c) w.at(r, c) = m.at(base_dim + r, c);
  std::vector<Rational> bc(full.coeffs().begin(), full.coeffs().begin() + base_dim);
  std::vector<Rational> units(full.coeffs().begin() + base_dim, full.coeffs().end());
  return {std::move(target), std::move(source), MonomialMap(std::move(bc), std::move(e)),
          std::move(w), std::move(units)};
}

TotalTransition TotalTransition::identity(const std::string& chart, std::size_t base_dim,
                                          std::size_t fiber_dim) {
  return {chart, chart, MonomialMap::identity(base_dim), IntMatrix(fiber_dim, base_dim),
          std::vector<Rational>(fiber_dim, Rational(1))};
}

TotalTransition compose(const TotalTransition& f, const TotalTransition& g) {
  if (g.target != f.source)
    throw Error(ErrorKind::DimensionMismatch, "cannot compose Psi_" + f.target + f.source +
                                                  " with Psi_" + g.target + g.source);
  return TotalTransition::from_full(f.target, g.source, compose(f.full(), g.full()),
                                    f.base_dim());
}

TotalTransition invert(const TotalTransition& t) {
  return TotalTransition::from_full(t.source, t.target, invert(t.full()), t.base_dim());
}

const Chart& AtlasModel::chart(const std::string& id) const {
  for (const auto& c : charts)
    if (c.id == id) return c;
  throw Error(ErrorKind::InvalidArgument, "unknown chart '" + id + "'");
}

bool AtlasModel::has_chart(const std::string& id) const {
  return std::any_of(charts.begin(), charts.end(), [&](const Chart& c) { return c.id == id; });
}

std::size_t AtlasModel::base_dim() const {
  return charts.empty() ? 0 : charts.front().coords.size();
}

namespace {

/// Declared transition Psi_{ij} or the inverse of a declared Psi_{ji}.
std::optional<TotalTransition> direct_transition(const AtlasModel& model, const std::string& i,
                                                 const std::string& j) {
  for (const auto& t : model.transitions)
    if (t.target == i && t.source == j) return t;
  for (const auto& t : model.transitions)
    if (t.target == j && t.source == i) return invert(t);
  return std::nullopt;
}

std::vector<std::string> neighbours(const AtlasModel& model, const std::string& c) {
  std::vector<std::string> out;
  for (const auto& t : model.transitions) {
    if (t.source == c) out.push_back(t.target);
    if (t.target == c) out.push_back(t.source);
  }
  return out;
}

}  // namespace

TotalTransition transition(const AtlasModel& model, const std::string& i, const std::string& j) {
  model.chart(i);
  model.chart(j);
  if (i == j) return TotalTransition::identity(i, model.base_dim(), model.fiber_dim());
  if (auto d = direct_transition(model, i, j)) return *d;

  // Breadth-first search from j; parent pointers give the path j -> ... -> i.
  std::map<std::string, std::string> parent;
  std::deque<std::string> queue{j};
  parent[j] = j;
  while (!queue.empty() && !parent.count(i)) {
    std::string c = queue.front();
    queue.pop_front();
    for (const auto& nb : neighbours(model, c))
      if (parent.emplace(nb, c).second) queue.push_back(nb);
  }
  if (!parent.count(i))
    throw Error(ErrorKind::Disconnected, "no chain of transitions from chart " + j +
                                             " to chart " + i);
  std::vector<std::string> path{i};
  while (path.back() != j) path.push_back(parent[path.back()]);
  // path = i, ..., j; compose Psi_{p0 p1} o Psi_{p1 p2} o ...
  TotalTransition acc = *direct_transition(model, path[0], path[1]);
  for (std::size_t s = 1; s + 1 < path.size(); ++s)
    acc = compose(acc, *direct_transition(model, path[s], path[s + 1]));
  return acc;
}

CocycleReport verify_cocycles(const AtlasModel& model) {
  std::set<ChartPair> declared;
  for (const auto& t : model.transitions) {
    declared.emplace(t.target, t.source);
    declared.emplace(t.source, t.target);
  }
  CocycleReport report;
  const auto& cs = model.charts;
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b)
      for (std::size_t c = b + 1; c < cs.size(); ++c) {
        const auto &i = cs[a].id, &j = cs[b].id, &k = cs[c].id;
        if (!declared.count({i, j}) || !declared.count({j, k}) || !declared.count({i, k}))
          continue;
        report.triangles.push_back({i, j, k});
        TotalTransition direct = *direct_transition(model, i, k);
        TotalTransition composed =
            compose(*direct_transition(model, i, j), *direct_transition(model, j, k));
        if (!(direct == composed)) report.failures.push_back({i, j, k, direct, composed});
      }
  return report;
}

MonomialMap derive_logform_cocycle(const AtlasModel& model, const std::string& i,
                                   const std::string& j) {
  const Chart& ci = model.chart(i);
  const Chart& cj = model.chart(j);
  const std::size_t n = model.base_dim();
  const MonomialMap base_ij = transition(model, i, j).base;  // z_i = c * z_j^E
  const IntMatrix& e = base_ij.exponents();

  // omega_i pulled back to chart j: prod c^v_i * z_j^{v_i E} * det(E) * dlog(z_j).
  Rational coeff = Rational(1) / Rational(e.determinant());
  std::vector<Integer> w(n);
  for (std::size_t s = 0; s < n; ++s) w[s] = cj.log_pole[s] ? 0 : 1;
  for (std::size_t r = 0; r < n; ++r) {
    if (ci.log_pole[r]) continue;
    coeff /= base_ij.coeffs()[r];
    for (std::size_t s = 0; s < n; ++s) w[s] -= e.at(r, s);
  }
  MonomialMap ratio_in_j({coeff}, IntMatrix::from_rows({w}));
  MonomialMap ratio_in_i = compose(ratio_in_j, invert(base_ij));
  return {{abs(ratio_in_i.coeffs()[0])}, ratio_in_i.exponents()};
}

bool LineBundleReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

LineBundleReport check_linebundle(const AtlasModel& model) {
  std::optional<std::size_t> central_row;
  if (model.fiber.central) {
    const auto& names = model.fiber.names;
    auto it = std::find(names.begin(), names.end(), *model.fiber.central);
    if (it != names.end()) central_row = static_cast<std::size_t>(it - names.begin());
  }
  const std::size_t n = model.base_dim();

  std::vector<ChartPair> pairs;
  if (central_row)
    for (const auto& t : model.transitions) pairs.emplace_back(t.target, t.source);
  for (const auto& [p, m] : model.central_cocycle)
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);

  LineBundleReport report;
  for (const auto& [i, j] : pairs) {
    LineBundleEntry entry{i, j, derive_logform_cocycle(model, i, j), {}, {}, true};
    std::vector<Integer> derived = entry.derived.exponents().row(0);
    if (central_row) {
      TotalTransition t = transition(model, i, j);
      IntMatrix w_row(1, n);
      for (std::size_t s = 0; s < n; ++s) w_row.at(0, s) = -t.twists.at(*central_row, s);
      entry.from_twist = (w_row * t.base.exponents().inverse()).row(0);
      entry.ok = entry.ok && *entry.from_twist == derived;
    }
    if (auto it = model.central_cocycle.find({i, j}); it != model.central_cocycle.end()) {
      entry.declared = it->second.exponents().row(0);
      entry.ok = entry.ok && *entry.declared == derived;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace flagclean
