#include "logsurf/graph_io.hpp"

#include "logsurf/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace logsurf {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(std::size_t line_no, const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) fail(line_no, "not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line_no, "not an integer: '" + s + "'");
    }
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
    GraphFile out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> edge_lines;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok.size() >= 3 && tok[1] == "--") {
            edge_lines.emplace_back(line_no, tok);
            continue;
        }
        if (tok.size() < 2) fail(line_no, "expected 'label self_int [genus] [flags]'");
        GraphVertex v;
        v.label = tok[0];
        v.self_int = -parse_int(line_no, tok[1]);
        std::size_t i = 2;
        if (i < tok.size() && (std::isdigit(static_cast<unsigned char>(tok[i][0])))) {
            v.genus = static_cast<int>(parse_int(line_no, tok[i]));
            ++i;
        }
        for (; i < tok.size(); ++i) {
            const std::string& flag = tok[i];
            if (flag == "boundary") {
                v.is_exceptional = false;
                out.boundary_coeffs[v.label] = Rational(1);
            } else if (flag.rfind("boundary=", 0) == 0) {
                v.is_exceptional = false;
                try {
                    out.boundary_coeffs[v.label] = Rational::parse(flag.substr(9));
                } catch (const Error& e) {
                    fail(line_no, e.what());
                }
            } else if (flag == "node") {
                v.node_count = 1;
            } else if (flag.rfind("nodes=", 0) == 0) {
                v.node_count = static_cast<int>(parse_int(line_no, flag.substr(6)));
            } else {
                fail(line_no, "unknown flag '" + flag + "'");
            }
        }
        if (v.genus < 0 || v.node_count < 0) fail(line_no, "negative genus or node count");
        if (out.graph.contains(v.label)) fail(line_no, "duplicate label '" + v.label + "'");
        out.graph.add_vertex(std::move(v));
    }
    for (const auto& [no, tok] : edge_lines) {
        if (tok.size() > 4) fail(no, "expected 'A -- B [multiplicity]'");
        const int mult = tok.size() == 4 ? static_cast<int>(parse_int(no, tok[3])) : 1;
        if (!out.graph.contains(tok[0])) fail(no, "unknown vertex '" + tok[0] + "'");
        if (!out.graph.contains(tok[2])) fail(no, "unknown vertex '" + tok[2] + "'");
        if (tok[0] == tok[2]) fail(no, "self-loops are not allowed; use the 'node' flag");
        if (mult <= 0) fail(no, "multiplicity must be positive");
        out.graph.add_edge(tok[0], tok[2], mult);
    }
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const GraphFile& g) {
    std::ostringstream out;
    for (const auto& v : g.graph.vertices()) {
        out << v.label << ' ' << -v.self_int;
        if (v.genus) out << ' ' << v.genus;
        if (v.node_count == 1) out << " node";
        else if (v.node_count > 1) out << " nodes=" << v.node_count;
        if (!v.is_exceptional) {
            const auto it = g.boundary_coeffs.find(v.label);
            out << " boundary=" << (it == g.boundary_coeffs.end() ? Rational(0) : it->second);
        }
        out << '\n';
    }
    for (const auto& e : g.graph.edges()) {
        out << e.a << " -- " << e.b;
        if (e.multiplicity != 1) out << ' ' << e.multiplicity;
        out << '\n';
    }
    return out.str();
}

}  // namespace logsurf
