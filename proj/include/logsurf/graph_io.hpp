#pragma once

#include "logsurf/dualgraph.hpp"

#include <map>
#include <string>
#include <string_view>

namespace logsurf {

/// A germ as read from a graph file: the graph plus boundary coefficients.
struct GraphFile {
    DualGraph graph;
    std::map<std::string, Rational> boundary_coeffs;
};

/// Line-oriented graph format:
///
///     # comment
///     E0 2                 vertex E0 with E0^2 = -2 (figures' convention)
///     C 1 1                genus one, E^2 = -1
///     N 3 0 node           nodal rational curve
///     B -1 boundary=1      non-exceptional curve, B^2 = +1, coefficient 1
///     E0 -- E1 [mult]      intersection number (default 1)
///
/// The self-intersection column is the number displayed in figures, i.e. -C^2.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

std::string format_graph(const GraphFile& g);

}  // namespace logsurf
