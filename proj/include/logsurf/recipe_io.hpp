#pragma once

#include "logsurf/lattice.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <string_view>

namespace logsurf {

/// {"lines": n, "steps": [["A","B"] | ["A","B","name"], ...],
///  "divisors": {name: {label: "p/q"}}}
struct RecipeFile {
    BlowupRecipe recipe;
    std::map<std::string, QDivisor> divisors;
};

RecipeFile recipe_from_json(const nlohmann::json& j);
nlohmann::json recipe_to_json(const RecipeFile& r);
RecipeFile parse_recipe(std::string_view text);

/// Parses JSON text; syntax errors become ParseError with line and column.
nlohmann::json parse_json_text(std::string_view text);

/// "p/q" string or integer.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);

/// Sum of terms "[coeff] name" joined by '+' or '-': name is K, a named
/// divisor, or a visible curve label.  "K + 10/11 B", "L0 - 1/2 L1".
LogDivisor parse_divisor_expr(std::string_view expr, const std::map<std::string, QDivisor>& named,
                              const SurfaceModel& m);

}  // namespace logsurf
