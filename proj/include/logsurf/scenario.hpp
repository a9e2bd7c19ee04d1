#pragma once

#include "logsurf/recipe_io.hpp"
#include "logsurf/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logsurf {

/// A recipe plus named divisors, named label sets and a list of checks.
///
///     {"name": ..., "title": ..., "lines": 4, "steps": [...],
///      "divisors": {...}, "sets": {name: [labels]},
///      "checks": [{"id": ..., "kind": ..., ..., "expect": {...}}]}
///
/// Check kinds: self_intersections, log_pullback, zariski, volume,
/// intersection, nef_certificate, contraction, germ, nef_threshold, pet,
/// identity_chain, quadmin.  Divisors are expressions such as "K + Ctilde".
struct Scenario {
    std::string name;
    std::string title;
    RecipeFile recipe;
    std::map<std::string, std::vector<std::string>> sets;
    nlohmann::json checks = nlohmann::json::array();
};

Scenario scenario_from_json(const nlohmann::json& j);
Scenario parse_scenario(std::string_view text);

std::vector<std::string> builtin_scenario_names();
std::optional<std::string_view> builtin_scenario_text(std::string_view name);

/// Built-in name first, then a file path.
Scenario load_scenario(const std::string& name_or_path);

Report run_scenario(const Scenario& s);

/// 32-bit FNV-1a, used to pin the built-in fixtures.
std::uint32_t fnv1a(std::string_view text);

}  // namespace logsurf
