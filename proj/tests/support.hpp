#pragma once

#include "logsurf/dualgraph.hpp"
#include "logsurf/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

constexpr std::uint32_t kSeed = 20261015u;

inline std::int64_t uniform(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Hirzebruch-Jung chain of n/q as self-intersections, from the first curve outwards.
inline std::vector<std::int64_t> hj_chain(std::int64_t n, std::int64_t q) {
    std::vector<std::int64_t> out;
    while (q > 0) {
        const std::int64_t e = (n + q - 1) / q;
        out.push_back(-e);
        const std::int64_t r = e * q - n;
        n = q;
        q = r;
    }
    return out;
}

/// Fork `F` with self-intersection e0 and the given branches attached at their first curve.
inline logsurf::DualGraph fork_graph(std::int64_t e0, const std::vector<std::vector<std::int64_t>>& branches) {
    logsurf::DualGraph g;
    g.add_vertex({"F", e0});
    for (std::size_t b = 0; b < branches.size(); ++b) {
        std::string prev = "F";
        for (std::size_t i = 0; i < branches[b].size(); ++i) {
            const std::string label = "B" + std::to_string(b) + "_" + std::to_string(i);
            g.add_vertex({label, branches[b][i]});
            g.add_edge(prev, label);
            prev = label;
        }
    }
    return g;
}

/// Lines L0..L(k-1) then up to `max_steps` blow-ups of randomly chosen nodes.
inline logsurf::BlowupRecipe random_recipe(std::mt19937& rng, std::size_t max_steps) {
    logsurf::BlowupRecipe r;
    r.num_lines = static_cast<int>(uniform(rng, 3, 5));
    const auto steps = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_steps)));
    for (std::size_t k = 0; k < steps; ++k) {
        const auto m = logsurf::build_from_recipe(r);
        std::vector<std::pair<std::string, std::string>> nodes(m.incidence().begin(), m.incidence().end());
        const auto& pick = nodes[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(nodes.size()) - 1))];
        r.steps.push_back({pick.first, pick.second, ""});
    }
    return r;
}

}  // namespace testsupport
