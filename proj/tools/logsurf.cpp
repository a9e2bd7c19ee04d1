#include "CLI11.hpp"

#include "logsurf/commands.hpp"
#include "logsurf/error.hpp"
#include "logsurf/graph_io.hpp"
#include "logsurf/scenario.hpp"
#include "logsurf/wps_io.hpp"

#include <iostream>

using namespace logsurf;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int emit(const Report& r, bool as_json) {
    if (as_json)
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        std::cout << render_text(r, color_from_env());
    return r.passed() ? kExitPass : kExitFail;
}

Rational rational_arg(const std::string& name, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, "--" + name + ": " + e.what());
    }
}

template <std::size_t N>
std::array<Rational, N> rational_list(const std::string& name, const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != N)
        throw Error(ErrorKind::ParseError, "--" + name + " needs " + std::to_string(N) + " comma-separated values");
    std::array<Rational, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = rational_arg(name, parts[i]);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for log surfaces with small volume"};
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the report as JSON");

    auto* scenario = app.add_subcommand("scenario", "Run a built-in scenario (ex-462, ex-825) or a scenario file");
    std::string scenario_name;
    scenario->add_option("name", scenario_name, "Built-in name or path")->required();
    scenario->add_flag("--json", as_json, "Print the report as JSON");
    bool list = false;
    app.add_flag("--list-scenarios", list, "List built-in scenarios");

    auto* germ = app.add_subcommand("germ", "Classify the germ described by a dual graph file");
    std::string graph_path;
    germ->add_option("file", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    germ->add_flag("--json", as_json, "Print the report as JSON");

    auto* wps = app.add_subcommand("wps", "Hypersurfaces in weighted projective space");
    wps->require_subcommand(1);
    wps->add_flag("--json", as_json, "Print the report as JSON");
    std::vector<std::int64_t> weights{6, 11, 25, 43};
    std::int64_t degree = 86, twist = 0, n = 6;
    std::vector<int> eps;
    std::string s_text = "0", t_text = "0", poly_path, expr, coeffs;

    auto* analyze = wps->add_subcommand("analyze", "Chart dossiers and lc/klt verdict");
    analyze->add_option("--eps", eps, "Four entries in {0,1}, e.g. 1,0,1,1")->delimiter(',')->expected(4);
    analyze->add_option("--s", s_text, "Coefficient of x2^2 x0^6");
    analyze->add_option("--t", t_text, "Coefficient of x1^4 x0^7");
    analyze->add_option("--poly", poly_path, "Polynomial file")->check(CLI::ExistingFile);
    analyze->add_option("--expr", expr, "Polynomial such as 'x3^2 + x2^3*x1'");
    analyze->add_option("--weights", weights, "Four weights")->delimiter(',')->expected(4);
    analyze->add_flag("--json", as_json, "Print the report as JSON");

    auto* nf = wps->add_subcommand("normal-form", "Reduce a1..a6 to the normal form");
    nf->add_option("--coeffs", coeffs, "Six comma-separated rationals")->required();
    nf->add_flag("--json", as_json, "Print the report as JSON");

    auto* hilbert = wps->add_subcommand("hilbert", "Hilbert function of the hypersurface ring");
    hilbert->add_option("--weights", weights, "Four weights")->delimiter(',')->expected(4);
    hilbert->add_option("--degree", degree, "Degree");
    hilbert->add_option("--n", n, "Graded piece");
    hilbert->add_flag("--json", as_json, "Print the report as JSON");

    auto* vol = wps->add_subcommand("volume", "(d - sum w + twist)^2 d / prod w");
    vol->add_option("--weights", weights, "Four weights")->delimiter(',')->expected(4);
    vol->add_option("--degree", degree, "Degree");
    vol->add_option("--twist", twist, "Twist added to d - sum w");
    vol->add_flag("--json", as_json, "Print the report as JSON");

    auto* enumerate = app.add_subcommand("enumerate", "Finite searches");
    enumerate->require_subcommand(1);
    enumerate->add_flag("--json", as_json, "Print the report as JSON");
    auto* l22 = enumerate->add_subcommand("lemma22", "Fork graphs whose contracted fork has square -1/3");
    l22->add_flag("--json", as_json, "Print the report as JSON");
    auto* l34 = enumerate->add_subcommand("lemma34", "Residue search and minimal adjunction degree");
    std::string target_text = "11/42";
    std::vector<std::int64_t> moduli{2, 3, 7};
    std::int64_t max_order = 5;
    std::size_t max_length = 6;
    l34->add_option("--target", target_text, "Target rational");
    l34->add_option("--moduli", moduli, "Orders")->delimiter(',');
    l34->add_option("--max-order", max_order, "Largest order in the adjunction search");
    l34->add_option("--max-length", max_length, "Longest order list in the adjunction search");
    l34->add_flag("--json", as_json, "Print the report as JSON");

    auto* quadmin = app.add_subcommand("quadmin", "Minimize a t^2 + b t + c");
    std::string a_text, b_text, c_text;
    quadmin->add_option("--a", a_text, "Leading coefficient")->required();
    quadmin->add_option("--b", b_text, "Linear coefficient")->required();
    quadmin->add_option("--c", c_text, "Constant")->required();
    quadmin->add_flag("--json", as_json, "Print the report as JSON");

    app.require_subcommand(0, 1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInput;
    }

    try {
        if (list) {
            for (const auto& name : builtin_scenario_names()) std::cout << name << "\n";
            return kExitPass;
        }
        if (*scenario) {
            const Scenario sc = load_scenario(scenario_name);
            return emit(run_scenario(sc), as_json);
        }
        if (*germ) {
            const GraphFile g = read_graph_file(graph_path);
            return emit(germ_report(g, graph_path), as_json);
        }
        if (*analyze) {
            if (!poly_path.empty()) {
                return emit(wps_analyze_poly_report(read_weighted_poly_file(poly_path), poly_path), as_json);
            }
            if (!expr.empty()) {
                check_weights(weights);
                return emit(wps_analyze_poly_report(make_weighted(parse_human_poly(expr), weights), expr), as_json);
            }
            if (eps.size() != 4) throw Error(ErrorKind::InvalidArgument, "give --eps, --poly or --expr");
            const Epsilon e{eps[0], eps[1], eps[2], eps[3]};
            return emit(wps_analyze_report(e, rational_arg("s", s_text), rational_arg("t", t_text)), as_json);
        }
        if (*nf) return emit(wps_normal_form_report(rational_list<6>("coeffs", coeffs)), as_json);
        if (*hilbert) return emit(wps_hilbert_report(weights, degree, n), as_json);
        if (*vol) return emit(wps_volume_report(weights, degree, twist), as_json);
        if (*l22) return emit(enumerate_lemma22_report(), as_json);
        if (*l34)
            return emit(enumerate_lemma34_report(rational_arg("target", target_text), moduli, max_order, max_length),
                        as_json);
        if (*quadmin) {
            const QuadraticForm1D f{rational_arg("a", a_text), rational_arg("b", b_text), rational_arg("c", c_text)};
            return emit(quadmin_report(f), as_json);
        }
        std::cerr << app.help();
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
