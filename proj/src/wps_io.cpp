#include "logsurf/wps_io.hpp"

#include "logsurf/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace logsurf {

namespace {

Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t to_int(const std::string& tok, std::size_t line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

WeightedPoly parse_weighted_poly(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    std::optional<Weights> weights;
    Poly p(4);
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "weights") {
            if (weights) throw parse_error(lineno, "duplicate weights header");
            if (toks.size() != 5) throw parse_error(lineno, "weights header needs four integers");
            Weights w;
            for (std::size_t i = 1; i < 5; ++i) w.push_back(to_int(toks[i], lineno));
            weights = w;
            continue;
        }
        if (!weights) throw parse_error(lineno, "missing weights header");
        if (toks.size() != 5) throw parse_error(lineno, "term needs a coefficient and four exponents");
        Rational c;
        try {
            c = Rational::parse(toks[0]);
        } catch (const std::exception&) {
            throw parse_error(lineno, "bad coefficient '" + toks[0] + "'");
        }
        Exponent e;
        for (std::size_t i = 1; i < 5; ++i) {
            const auto v = to_int(toks[i], lineno);
            if (v < 0) throw parse_error(lineno, "negative exponent");
            e.push_back(static_cast<int>(v));
        }
        p.add_term(e, c);
    }
    if (!weights) throw Error(ErrorKind::ParseError, "missing weights header");
    check_weights(*weights);
    return make_weighted(p, *weights);
}

WeightedPoly read_weighted_poly_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_weighted_poly(buf.str());
}

std::string format_weighted_poly(const WeightedPoly& p) {
    std::ostringstream out;
    out << "weights";
    for (auto w : p.weights) out << ' ' << w;
    out << '\n';
    for (auto it = p.poly.terms().rbegin(); it != p.poly.terms().rend(); ++it) {
        out << it->second.str();
        for (int e : it->first) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

namespace {

class HumanParser {
public:
    explicit HumanParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly out(4);
        skip();
        if (at_end()) throw err("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw err("expected '+' or '-'");
            }
            out += term(sign);
            first = false;
            skip();
        }
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    Error err(const std::string& what) const {
        return Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw err("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    Poly term(int sign) {
        Rational c(sign);
        Exponent e(4, 0);
        bool need_factor = true;
        while (need_factor) {
            skip();
            if (at_end()) throw err("unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string num = digits();
                skip();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip();
                    num += "/" + digits();
                }
                c *= Rational::parse(num);
            } else if (peek() == 'x') {
                ++pos_;
                const std::string idx = digits();
                if (idx.size() != 1 || idx[0] > '3') throw err("variables are x0..x3");
                int power = 1;
                skip();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip();
                    power = std::stoi(digits());
                }
                e[idx[0] - '0'] += power;
            } else {
                throw err(std::string("unexpected character '") + peek() + "'");
            }
            skip();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) ++pos_;
        }
        return Poly::monomial(e, c);
    }
};

}  // namespace

Poly parse_human_poly(std::string_view text) { return HumanParser(text).parse(); }

}  // namespace logsurf
