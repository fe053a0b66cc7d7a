#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagclean/atlas.hpp"
#include "flagclean/cleanness.hpp"
#include "flagclean/rational.hpp"

namespace flagclean {

/// Direct image of Omega^(mu_1) x ... x Omega^(mu_n) from the torus to
/// affine n-space, on its monomial basis e_w, w in Z^n. The coordinate
/// operator x_i sends e_w to e_{w+e_i}; the derivative operator sends e_w to
/// c_i(w) e_{w-e_i} with c_i(w) = -(mu_i + w_i). A submodule is spanned by
/// the basis vectors it contains, so the submodule generated by e_w is
/// spanned by the lattice points reachable from w.
class LatticeModule {
 public:
  using Point = std::vector<std::int64_t>;

  LatticeModule(std::vector<Rational> mu, std::int64_t window);

  std::size_t dim() const { return mu_.size(); }
  std::int64_t window() const { return window_; }
  const std::vector<Rational>& mu() const { return mu_; }

  /// Smallest window the reachability graph needs to see every possible
  /// vanishing coefficient: 2 + max_i |mu_i| rounded, ties away from zero.
  static std::int64_t required_window(std::span<const Rational> mu);

  Rational lowering_coefficient(std::size_t i, const Point& w) const;
  /// Eigenvalues of the Euler operators on e_w: mu + w.
  std::vector<Rational> weight(const Point& w) const;

  /// All window points reachable from `start`.
  std::vector<Point> reachable_from(const Point& start) const;
  /// Every window point reaches every other one.
  bool strongly_connected() const;

 private:
  std::size_t index(const Point& w) const;
  Point point(std::size_t index) const;
  std::size_t node_count() const;
  std::vector<bool> search(std::size_t start, bool reversed) const;

  std::vector<Rational> mu_;
  std::int64_t window_;
};

/// Simplicity of the direct image, decided by reachability. Throws
/// WindowTooSmall when `window` is below LatticeModule::required_window.
bool is_simple(std::span<const Rational> mu, std::int64_t window);

/// Clean iff simple for mu and for -mu (duality exchanges the two
/// extensions and negates the exponents).
bool is_clean_oracle(std::span<const Rational> mu, std::int64_t window);

std::vector<LatticeModule::Point> submodule_support(std::span<const Rational> mu,
                                                    const LatticeModule::Point& start,
                                                    std::int64_t window);

struct ChartOracle {
  std::string chart;
  std::vector<std::string> coords;  ///< divisorial coordinates fed to the oracle
  std::vector<Rational> exponents;  ///< their exponents at the assignment
  bool clean = true;
};

struct OracleAgreement {
  std::vector<ChartOracle> charts;
  bool oracle_clean = true;
  Verdict criterion;
  bool agree() const { return oracle_clean == criterion.clean; }
};

/// Runs the lattice oracle chart by chart on the divisorial exponents and
/// compares the conjunction with the criterion verdict. Each exponent is
/// first translated by its nearest integer (the lattice isomorphism
/// e_w -> e_{w+s} between the modules for mu and mu - s), so every chart fits
/// the window whenever window >= 2.
OracleAgreement oracle_vs_criterion(const AtlasModel& model, const Assignment& assignment,
                                    std::int64_t window);

struct GridDisagreement {
  Assignment assignment;
  OracleAgreement report;
};

struct GridReport {
  std::uint64_t grid_size = 0;
  std::uint64_t cases = 0;
  std::uint64_t agreements = 0;
  std::uint64_t clean_cases = 0;
  std::vector<GridDisagreement> disagreements;
  bool ok() const { return agreements == cases; }
};

/// Rationals p/q with 1 <= q <= denominator_bound and |p/q| <= range,
/// ascending and without repetition.
std::vector<Rational> grid_values(std::int64_t denominator_bound, std::int64_t range);

/// oracle_vs_criterion over the product grid of grid_values for all
/// parameters (in parameter order). If the grid has more than `max_cases`
/// points, the points with indices floor(k * size / max_cases) are taken.
GridReport oracle_grid(const AtlasModel& model, std::int64_t denominator_bound,
                       std::int64_t range, std::int64_t window, std::uint64_t max_cases);

}  // namespace flagclean
