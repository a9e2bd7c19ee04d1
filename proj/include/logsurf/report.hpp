#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace logsurf {

/// One executed check: exact values are serialized as "p/q" strings.
struct CheckRecord {
    std::string id;
    std::string kind;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    bool passed = true;
    std::vector<std::string> failures;
    std::int64_t elapsed_us = 0;
};

struct Report {
    std::string name;
    std::string kind;  // scenario, germ, wps, enumerate, quadmin
    std::vector<CheckRecord> checks;

    bool passed() const;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Human-readable rendering; ANSI colors when `color` is set.
std::string render_text(const Report& r, bool color);

/// LOGSURF_COLOR: "always"/"1" force colors, "never"/"0" disable; default off.
bool color_from_env();

}  // namespace logsurf
