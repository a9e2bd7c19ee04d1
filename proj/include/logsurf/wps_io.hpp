#pragma once

#include "logsurf/wps.hpp"

#include <string>
#include <string_view>

namespace logsurf {

/// `weights w0 w1 w2 w3` header, then one `coeff e0 e1 e2 e3` term per line; `#` comments.
WeightedPoly parse_weighted_poly(std::string_view text);
WeightedPoly read_weighted_poly_file(const std::string& path);
std::string format_weighted_poly(const WeightedPoly& p);

/// Human form such as `x3^2 + x2^3*x1 - 1/2*x0^6*x2^2` in variables x0..x3.
Poly parse_human_poly(std::string_view text);

}  // namespace logsurf
