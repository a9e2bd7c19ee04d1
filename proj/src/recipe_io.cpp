#include "logsurf/recipe_io.hpp"

#include "logsurf/error.hpp"

#include <cctype>

namespace logsurf {

using nlohmann::json;

nlohmann::json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected rational, got " + j.dump());
}

json rational_to_json(const Rational& q) { return q.str(); }

RecipeFile recipe_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "recipe must be a JSON object");
    RecipeFile out;
    try {
        out.recipe.num_lines = j.at("lines").get<int>();
        for (const auto& s : j.value("steps", json::array())) {
            if (!s.is_array() || s.size() < 2 || s.size() > 3)
                throw Error(ErrorKind::ParseError, "step must be [A, B] or [A, B, name]: " + s.dump());
            PointSpec p{s[0].get<std::string>(), s[1].get<std::string>(), ""};
            if (s.size() == 3) p.name = s[2].get<std::string>();
            out.recipe.steps.push_back(std::move(p));
        }
        const json divisors = j.value("divisors", json::object());
        for (const auto& [name, coeffs] : divisors.items()) {
            QDivisor d;
            for (const auto& [label, c] : coeffs.items()) d[label] = rational_from_json(c);
            out.divisors[name] = d;
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("recipe: ") + e.what());
    }
    return out;
}

json recipe_to_json(const RecipeFile& r) {
    json steps = json::array();
    for (const auto& s : r.recipe.steps) {
        json step = {s.a, s.b};
        if (!s.name.empty()) step.push_back(s.name);
        steps.push_back(step);
    }
    json divisors = json::object();
    for (const auto& [name, d] : r.divisors) {
        json coeffs = json::object();
        for (const auto& [label, c] : d) coeffs[label] = rational_to_json(c);
        divisors[name] = coeffs;
    }
    return {{"lines", r.recipe.num_lines}, {"steps", steps}, {"divisors", divisors}};
}

RecipeFile parse_recipe(std::string_view text) { return recipe_from_json(parse_json_text(text)); }

LogDivisor parse_divisor_expr(std::string_view expr, const std::map<std::string, QDivisor>& named,
                              const SurfaceModel& m) {
    LogDivisor out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::ParseError, "divisor '" + std::string(expr) + "': " + what);
    };
    bool first = true;
    while (true) {
        skip();
        if (i == expr.size()) break;
        int sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff(1);
        if (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            const std::size_t start = i;
            while (i < expr.size() && (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '/')) ++i;
            coeff = Rational::parse(expr.substr(start, i - start));
            skip();
            if (i < expr.size() && expr[i] == '*') {
                ++i;
                skip();
            }
        }
        const std::size_t start = i;
        while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_')) ++i;
        if (start == i) fail("expected a name");
        const std::string name(expr.substr(start, i - start));
        coeff = sign * coeff;
        if (name == "K") {
            out.canonical += coeff;
        } else if (auto it = named.find(name); it != named.end()) {
            out.boundary = out.boundary + coeff * it->second;
        } else if (m.is_visible(name)) {
            out.boundary = out.boundary + QDivisor{{name, coeff}};
        } else {
            throw Error(ErrorKind::UnknownLabel, "divisor '" + std::string(expr) + "': unknown name " + name);
        }
    }
    if (first) fail("empty expression");
    return out;
}

}  // namespace logsurf
