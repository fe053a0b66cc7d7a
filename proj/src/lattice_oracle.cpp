#include "flagclean/lattice_oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flagclean/error.hpp"

namespace flagclean {

namespace {

/// lowering_blocked[i][w_i + window] is true where c_i vanishes. The
/// coefficient depends on w only through w_i.
std::vector<std::vector<bool>> blocked_table(const LatticeModule& m) {
  std::vector<std::vector<bool>> table(m.dim());
  const std::int64_t b = m.window();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    LatticeModule::Point w(m.dim(), 0);
    for (std::int64_t x = -b; x <= b; ++x) {
      w[i] = x;
      table[i].push_back(m.lowering_coefficient(i, w) == 0);
    }
  }
  return table;
}

}  // namespace

LatticeModule::LatticeModule(std::vector<Rational> mu, std::int64_t window)
    : mu_(std::move(mu)), window_(window) {
  const std::int64_t needed = required_window(mu_);
  if (window_ < needed)
    throw Error(ErrorKind::WindowTooSmall, "window " + std::to_string(window_) +
                                               " is below the required " +
                                               std::to_string(needed));
}

std::int64_t LatticeModule::required_window(std::span<const Rational> mu) {
  std::int64_t m = 0;
  for (const auto& x : mu) m = std::max<std::int64_t>(m, to_long(round_nearest(abs(x))));
  return 2 + m;
}

Rational LatticeModule::lowering_coefficient(std::size_t i, const Point& w) const {
  return -(mu_[i] + Rational(w[i]));
}

std::vector<Rational> LatticeModule::weight(const Point& w) const {
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = mu_[i] + Rational(w[i]);
  return out;
}

std::size_t LatticeModule::node_count() const {
  std::size_t side = static_cast<std::size_t>(2 * window_ + 1);
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim(); ++i) n *= side;
  return n;
}

std::size_t LatticeModule::index(const Point& w) const {
  const auto side = static_cast<std::size_t>(2 * window_ + 1);
  std::size_t idx = 0;
  for (std::size_t i = dim(); i-- > 0;) idx = idx * side + static_cast<std::size_t>(w[i] + window_);
  return idx;
}

LatticeModule::Point LatticeModule::point(std::size_t idx) const {
  const auto side = static_cast<std::size_t>(2 * window_ + 1);
  Point w(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    w[i] = static_cast<std::int64_t>(idx % side) - window_;
    idx /= side;
  }
  return w;
}

std::vector<bool> LatticeModule::search(std::size_t start, bool reversed) const {
  const auto blocked = blocked_table(*this);
  const auto side = static_cast<std::size_t>(2 * window_ + 1);
  std::vector<std::size_t> stride(dim(), 1);
  for (std::size_t i = 1; i < dim(); ++i) stride[i] = stride[i - 1] * side;

  std::vector<bool> seen(node_count(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < dim(); ++i) {
      const std::size_t xi = (v / stride[i]) % side;  // w_i + window
      // Forward edges: v -> v+e_i always; v -> v-e_i unless c_i(v) = 0.
      // Reversed edges into v: from v-e_i by raising (always), from v+e_i by
      // lowering unless c_i(v+e_i) = 0.
      if (xi + 1 < side) {
        const bool ok = reversed ? !blocked[i][xi + 1] : true;
        const std::size_t u = v + stride[i];
        if (ok && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
      if (xi > 0) {
        const bool ok = reversed ? true : !blocked[i][xi];
        const std::size_t u = v - stride[i];
        if (ok && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return seen;
}

std::vector<LatticeModule::Point> LatticeModule::reachable_from(const Point& start) const {
  for (auto x : start)
    if (x < -window_ || x > window_)
      throw Error(ErrorKind::InvalidArgument, "start point outside the window");
  if (start.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "start point dimension");
  const auto seen = search(index(start), false);
  std::vector<Point> out;
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k]) out.push_back(point(k));
  std::sort(out.begin(), out.end());
  return out;
}

bool LatticeModule::strongly_connected() const {
  const std::size_t corner = 0;
  const auto fwd = search(corner, false);
  if (std::find(fwd.begin(), fwd.end(), false) != fwd.end()) return false;
  const auto bwd = search(corner, true);
  return std::find(bwd.begin(), bwd.end(), false) == bwd.end();
}

bool is_simple(std::span<const Rational> mu, std::int64_t window) {
  return LatticeModule({mu.begin(), mu.end()}, window).strongly_connected();
}

bool is_clean_oracle(std::span<const Rational> mu, std::int64_t window) {
  std::vector<Rational> neg;
  for (const auto& x : mu) neg.push_back(-x);
  return is_simple(mu, window) && is_simple(neg, window);
}

std::vector<LatticeModule::Point> submodule_support(std::span<const Rational> mu,
                                                    const LatticeModule::Point& start,
                                                    std::int64_t window) {
  return LatticeModule({mu.begin(), mu.end()}, window).reachable_from(start);
}

namespace {

struct PreparedModel {
  const AtlasModel& model;
  std::vector<ExponentVector> chart_exps;
  Criterion crit;

  explicit PreparedModel(const AtlasModel& m) : model(m), crit(criterion(m)) {
    for (const auto& c : m.charts) chart_exps.push_back(chart_exponents(m, c.id));
  }

  OracleAgreement run(const Assignment& assignment, std::int64_t window) const {
    OracleAgreement out;
    for (std::size_t k = 0; k < model.charts.size(); ++k) {
      const Chart& chart = model.charts[k];
      ChartOracle co{chart.id, {}, {}, true};
      std::vector<Rational> centred;
      for (std::size_t s = 0; s < chart.coords.size(); ++s) {
        if (!chart.divisorial[s]) continue;
        Rational mu = evaluate(chart_exps[k].base[s], assignment);
        co.coords.push_back(chart.coords[s]);
        centred.push_back(mu - Rational(round_nearest(mu)));
        co.exponents.push_back(std::move(mu));
      }
      co.clean = centred.empty() || is_clean_oracle(centred, window);
      out.oracle_clean = out.oracle_clean && co.clean;
      out.charts.push_back(std::move(co));
    }
    out.criterion = evaluate(crit, assignment);
    return out;
  }
};

}  // namespace

OracleAgreement oracle_vs_criterion(const AtlasModel& model, const Assignment& assignment,
                                    std::int64_t window) {
  for (const auto& name : model.params.names())
    if (!assignment.count(name))
      throw Error(ErrorKind::MissingParameter, "no value assigned to parameter '" + name + "'");
  return PreparedModel(model).run(assignment, window);
}

std::vector<Rational> grid_values(std::int64_t denominator_bound, std::int64_t range) {
  if (denominator_bound < 1 || range < 0)
    throw Error(ErrorKind::InvalidArgument, "grid needs denominator bound >= 1 and range >= 0");
  std::set<Rational> values;
  for (std::int64_t q = 1; q <= denominator_bound; ++q)
    for (std::int64_t p = -range * q; p <= range * q; ++p) {
      Rational v(p, q);
      v.canonicalize();  // the two-argument constructor does not reduce
      values.insert(v);
    }
  return {values.begin(), values.end()};
}

GridReport oracle_grid(const AtlasModel& model, std::int64_t denominator_bound,
                       std::int64_t range, std::int64_t window, std::uint64_t max_cases) {
  const auto values = grid_values(denominator_bound, range);
  const auto& names = model.params.names();
  const std::uint64_t base = values.size();
  GridReport report;
  report.grid_size = 1;
  for (std::size_t i = 0; i < names.size(); ++i) report.grid_size *= base;

  const std::uint64_t cases = std::min<std::uint64_t>(report.grid_size, std::max<std::uint64_t>(max_cases, 1));
  PreparedModel prepared(model);
  for (std::uint64_t k = 0; k < cases; ++k) {
    // floor(k * size / cases) without overflow for the sizes used here.
    const unsigned __int128 wide = static_cast<unsigned __int128>(k) * report.grid_size / cases;
    std::uint64_t idx = static_cast<std::uint64_t>(wide);
    Assignment a;
    // Last parameter varies fastest.
    for (std::size_t i = names.size(); i-- > 0;) {
      a[names[i]] = values[idx % base];
      idx /= base;
    }
    OracleAgreement r = prepared.run(a, window);
    ++report.cases;
    if (r.criterion.clean) ++report.clean_cases;
    if (r.agree())
      ++report.agreements;
    else
      report.disagreements.push_back({std::move(a), std::move(r)});
  }
  return report;
}

}  // namespace flagclean
