#pragma once

#include "graphdim/generators.hpp"
#include "graphdim/graph.hpp"

#include <vector>

namespace graphdim::testing {

/// K_4 on {0,1,2,3} plus the edge {3,4}.
inline Graph k4_with_pendant() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

/// Triangles {0,1,2} and {1,2,3} sharing the edge {1,2}.
inline Graph diamond() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph bowtie() { return windmill(2); }

inline Graph octahedron() {
    return join(join(edgeless_graph(2), edgeless_graph(2)), edgeless_graph(2));
}

inline Graph wheel4() { return join(cycle_graph(4), complete_graph(1)); }

/// Small mixed corpus: seeded G(n, p) over a range of orders and densities.
inline std::vector<Graph> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    SeededRng rng(seed);
    const Rational ps[] = {Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                           Rational(4, 5)};
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(erdos_renyi(1 + rng.below(max_n), ps[rng.below(5)], rng.next()));
    return out;
}

} // namespace graphdim::testing
