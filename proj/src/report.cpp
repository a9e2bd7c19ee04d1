#include "logsurf/report.hpp"

#include "logsurf/error.hpp"

#include <cstdlib>
#include <sstream>

namespace logsurf {

using nlohmann::json;

bool Report::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id},
                          {"kind", c.kind},
                          {"inputs", c.inputs},
                          {"outputs", c.outputs},
                          {"passed", c.passed},
                          {"failures", c.failures},
                          {"elapsed_us", c.elapsed_us}});
    }
    return {{"name", r.name}, {"kind", r.kind}, {"passed", r.passed()}, {"checks", checks}};
}

Report report_from_json(const json& j) {
    Report r;
    try {
        r.name = j.at("name").get<std::string>();
        r.kind = j.at("kind").get<std::string>();
        for (const auto& c : j.at("checks")) {
            CheckRecord rec;
            rec.id = c.at("id").get<std::string>();
            rec.kind = c.at("kind").get<std::string>();
            rec.inputs = c.at("inputs");
            rec.outputs = c.at("outputs");
            rec.passed = c.at("passed").get<bool>();
            rec.failures = c.at("failures").get<std::vector<std::string>>();
            rec.elapsed_us = c.at("elapsed_us").get<std::int64_t>();
            r.checks.push_back(std::move(rec));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
    }
    return r;
}

namespace {

std::string flatten(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string render_text(const Report& r, bool color) {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::ostringstream os;
    os << r.kind << " " << r.name << "\n";
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
        if (c.passed) ++passed;
        os << "  " << (c.passed ? green : red) << (c.passed ? "[PASS] " : "[FAIL] ") << reset << c.id << " ("
           << c.kind << ", " << c.elapsed_us << " us)\n";
        for (const auto& [key, value] : c.outputs.items()) {
            if (value.is_object() || (value.is_array() && value.size() > 8)) {
                os << "      " << key << ":\n";
                if (value.is_object()) {
                    for (const auto& [k2, v2] : value.items()) os << "        " << k2 << " = " << flatten(v2) << "\n";
                } else {
                    for (const auto& v2 : value) os << "        " << flatten(v2) << "\n";
                }
            } else {
                os << "      " << key << " = " << flatten(value) << "\n";
            }
        }
        for (const auto& f : c.failures) os << "      " << red << "! " << f << reset << "\n";
    }
    os << passed << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

bool color_from_env() {
    const char* v = std::getenv("LOGSURF_COLOR");
    if (!v) return false;
    const std::string s(v);
    return s == "1" || s == "always" || s == "true";
}

}  // namespace logsurf
