#pragma once

#include "graphdim/graph.hpp"
#include "graphdim/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace graphdim {

/// Seeded generator used by every random family.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// instead of std::uniform_int_distribution (implementation-defined), so a
/// seed yields the same graph with every compiler and platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability p (0 <= p <= 1).
    bool bernoulli(const Rational& p);
    std::vector<Vertex> permutation(std::size_t n);
    /// Uniform k-subset of {0..n-1}, ascending.
    std::vector<Vertex> sample(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
};

/// K_k core on 0..k-1; leaf j (id k + j) hangs off core vertex j mod k, so
/// core degrees differ by at most one. Requires 2 <= k <= n.
Graph star_clique(std::size_t k, std::size_t n);

/// Cube with every corner replaced by a K_4 (block b holds 4b..4b+3) and every
/// cube edge replaced by the perfect matching 4b+i -- 4b'+i. 32 vertices.
Graph inflated_cube();

/// Two K_c blocks (0..c-1 and c..2c-1) joined by the matching i -- c+i. c >= 2.
Graph double_clique_matching(std::size_t c);

/// t triangles {0, 2j+1, 2j+2} sharing vertex 0. t >= 1.
Graph windmill(std::size_t t);

/// Random connected pure graph on n vertices whose maximal cliques all have
/// order N: K_N blocks glued onto 1..N-1 existing vertices, each step
/// resampled until the result is still pure with clique order N. Throws
/// ResourceLimit when `max_rejections` resamples are used up.
Graph pure_glued(std::size_t n, std::size_t clique_order, std::uint64_t seed,
                 std::size_t max_rejections = 100'000);

/// G(n, p): each pair {i < j}, in lexicographic order, is kept with
/// probability p.
Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed);

/// Uniform random recursive tree: vertex i >= 1 attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// G(n, p) resampled (with derived seeds) until connected.
Graph random_connected(std::size_t n, const Rational& p, std::uint64_t seed,
                       std::size_t max_attempts = 10'000);

/// Family name plus "key=value" parameters, as accepted on the command line.
struct GenSpec {
    std::string family;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;

    /// Parses "k=4,n=12".
    static std::map<std::string, std::string> parse_params(const std::string& text);
};

/// Families: complete(n) edgeless(n) cycle(n) path(n) petersen star_clique(k,n)
/// inflated_cube double_clique_matching(c) windmill(t) pure_glued(n,N)
/// erdos_renyi(n,p) tree(n). Throws InvalidInput on unknown family or bad
/// parameters.
Graph generate(const GenSpec& spec);

std::vector<std::string> generator_families();

} // namespace graphdim
