#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flagclean/atlas.hpp"
#include "flagclean/cleanness.hpp"
#include "flagclean/lattice_oracle.hpp"
#include "flagclean/loop_matrix.hpp"
#include "flagclean/model_file.hpp"

namespace flagclean {

using Json = nlohmann::ordered_json;

/// Every command builds one Json report; the text output is rendered from
/// that same value.
Json derive_report(const Criterion& crit);
Json check_report(const Criterion& crit, const Verdict& verdict);
Json transitions_report(const AtlasModel& model);
Json linebundle_report(const AtlasModel& model, const LineBundleReport& report);
Json oracle_simple_report(const std::vector<Rational>& mu, std::int64_t window, bool simple);
Json oracle_clean_report(const AtlasModel& model, const Assignment& assignment, std::int64_t window,
                         const OracleAgreement& agreement);
Json oracle_grid_report(const AtlasModel& model, std::int64_t denominator_bound, std::int64_t range,
                        std::int64_t window, const GridReport& report);
Json verify_report(const ModelDocument& doc, const CocycleReport& cocycles,
                   const LineBundleReport& linebundle, const FixtureReport& fixtures);

std::string render_derive(const Json& r, bool witnesses);
std::string render_check(const Json& r);
std::string render_transitions(const Json& r);
std::string render_linebundle(const Json& r);
std::string render_oracle_simple(const Json& r);
std::string render_oracle_clean(const Json& r);
std::string render_oracle_grid(const Json& r);
std::string render_verify(const Json& r);

/// "100" when every case agrees, otherwise the percentage truncated to two
/// decimals (never rounds up to 100).
std::string agreement_percent(std::uint64_t agreements, std::uint64_t cases);

}  // namespace flagclean
