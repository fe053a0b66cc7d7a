#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagclean/linear_form.hpp"
#include "flagclean/monomial_map.hpp"

namespace flagclean {

/// An affine chart A^n of the compactification. `divisorial[s]` marks that
/// the zero locus of coordinate s lies in the boundary of the open torus;
/// `log_pole[s]` marks that the reference section of the line bundle has a
/// simple pole along it (and implies divisorial).
struct Chart {
  std::string id;
  std::vector<std::string> coords;
  std::vector<bool> divisorial;
  std::vector<bool> log_pole;

  bool operator==(const Chart&) const = default;
};

/// Coordinates of the fiber torus. `central`, when set, names the fiber
/// coordinate of the line-bundle torsor whose twist rows are the line-bundle
/// cocycle.
struct FiberSpec {
  std::vector<std::string> names;
  std::optional<std::string> central;

  bool operator==(const FiberSpec&) const = default;
};

/// Psi_{target,source}: chart `source` coordinates -> chart `target`
/// coordinates on base x fiber. Base part z -> c * z^E; fiber coordinate r
/// maps to units[r] * z^{twists row r} * f_r. As a single monomial map the
/// exponent matrix is [[E, 0], [W, I]].
struct TotalTransition {
  std::string target;
  std::string source;
  MonomialMap base;
  IntMatrix twists;
  std::vector<Rational> units;

  std::size_t base_dim() const { return base.source_dim(); }
  std::size_t fiber_dim() const { return units.size(); }

  MonomialMap full() const;
  static TotalTransition from_full(std::string target, std::string source,
                                   const MonomialMap& full, std::size_t base_dim);
  static TotalTransition identity(const std::string& chart, std::size_t base_dim,
                                  std::size_t fiber_dim);

  bool operator==(const TotalTransition&) const = default;
};

/// f o g; requires g.target == f.source.
TotalTransition compose(const TotalTransition& f, const TotalTransition& g);
TotalTransition invert(const TotalTransition& t);

using ChartPair = std::pair<std::string, std::string>;

struct AtlasModel {
  ParamSpace params;
  std::vector<Chart> charts;
  FiberSpec fiber;
  std::string reference;
  std::vector<TotalTransition> transitions;
  /// Exponents of the local system in reference-chart coordinates.
  ExponentVector local_system;
  /// Optional declared inverse line-bundle cocycle t^(-1)_{ij}, as a one-row
  /// monomial map in chart-i coordinates; keyed by (i, j).
  std::map<ChartPair, MonomialMap> central_cocycle;

  const Chart& chart(const std::string& id) const;
  bool has_chart(const std::string& id) const;
  std::size_t base_dim() const;
  std::size_t fiber_dim() const { return fiber.names.size(); }

  bool operator==(const AtlasModel&) const = default;
};

/// Psi_{ij}: chart-j coordinates to chart-i coordinates. A declared
/// transition (or the inverse of one) is used directly; otherwise the
/// breadth-first path through declared transitions is composed.
TotalTransition transition(const AtlasModel& model, const std::string& i, const std::string& j);

struct CocycleFailure {
  std::string i, j, k;
  TotalTransition direct;    ///< Psi_ik as declared
  TotalTransition composed;  ///< Psi_ij o Psi_jk
};

struct CocycleReport {
  std::vector<std::array<std::string, 3>> triangles;
  std::vector<CocycleFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks Psi_ik = Psi_ij o Psi_jk for every triangle of charts whose three
/// pairs all carry a declared transition (in either direction).
CocycleReport verify_cocycles(const AtlasModel& model);

/// t^(-1)_{ij} = omega_j / omega_i as a one-row monomial map in chart-i
/// coordinates, where omega_c = (prod of non-pole coordinates) *
/// dlog z_1 ^ ... ^ dlog z_n. The overall sign is dropped.
MonomialMap derive_logform_cocycle(const AtlasModel& model, const std::string& i,
                                   const std::string& j);

struct LineBundleEntry {
  std::string i, j;
  MonomialMap derived;  ///< t^(-1)_{ij}, chart-i coordinates
  /// -W_central * E^-1: what the central twist row of Psi_ij implies for the
  /// exponents of t^(-1)_{ij} in chart-i coordinates.
  std::optional<std::vector<Integer>> from_twist;
  std::optional<std::vector<Integer>> declared;
  bool ok = true;
};

struct LineBundleReport {
  std::vector<LineBundleEntry> entries;
  bool ok() const;
};

/// Compares derived log-form cocycles with the central fiber twists of every
/// declared transition and with the declared cocycle, exponents exactly.
LineBundleReport check_linebundle(const AtlasModel& model);

}  // namespace flagclean
