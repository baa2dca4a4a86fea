#ifndef DAGWIDTH_GENERATORS_HPP
#define DAGWIDTH_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dag.hpp"

// Randomness comes from std::mt19937_64 with the standard library's distributions. The engine is
// fully specified, the distributions are not, so a seed reproduces a graph exactly only on the
// same standard library implementation.

namespace dagwidth {

enum class Family { chain_union, layered, staircase, independent, chain };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::chain_union: return "chain-union";
        case Family::layered: return "layered";
        case Family::staircase: return "staircase";
        case Family::independent: return "independent";
        case Family::chain: return "chain";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::chain_union, Family::layered, Family::staircase, Family::independent, Family::chain})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

struct GenConfig {
    Family family = Family::chain_union;
    std::size_t k = 1;
    std::size_t n = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// A path 0 -> 1 -> ... -> n-1.
inline Dag gen_chain(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Dag::from_ordered_edges(n, std::move(edges));
}

inline Dag gen_independent(std::size_t k) { return Dag::from_ordered_edges(k, {}); }

/**
 * @brief k disjoint chains over n vertices plus random forward cross-edges; width exactly k.
 *
 * Vertex g belongs to chain g % k at position g / k, so vertices 0..k-1 are the chain heads.
 * Each non-head vertex, for every other chain, with probability p receives an edge from a
 * uniformly chosen earlier vertex of that chain. Heads receive no edges, hence form an antichain,
 * and the chains cover every vertex.
 */
inline Dag gen_chain_union(std::size_t k, std::size_t n, double p, std::uint64_t seed) {
    if (k < 1 || n < k) throw std::invalid_argument("chain-union requires n >= k >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("cross-edge probability must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    edges.reserve(n + static_cast<std::size_t>(static_cast<double>(n * (k - 1)) * p));
    for (std::size_t g = k; g < n; ++g) {
        edges.emplace_back(g - k, g);
        const std::size_t own = g % k;
        for (std::size_t c = 0; c < k; ++c) {
            if (c == own || !coin(rng)) continue;
            // vertices c, c + k, c + 2k, ... below g
            const std::size_t count = (g - 1 - c) / k + 1;
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            edges.emplace_back(c + pick(rng) * k, g);
        }
    }
    return Dag::from_ordered_edges(n, std::move(edges));
}

/// Independent layers of sizes k, k-1, ..., 1; each vertex points to the whole next layer.
inline Dag gen_staircase(std::size_t k) {
    if (k < 1) throw std::invalid_argument("staircase requires k >= 1");
    std::vector<Edge> edges;
    std::size_t start = 0;
    for (std::size_t size = k; size > 1; --size) {
        const std::size_t next = start + size;
        for (std::size_t u = start; u < next; ++u)
            for (std::size_t v = next; v < next + size - 1; ++v) edges.emplace_back(u, v);
        start = next;
    }
    return Dag::from_ordered_edges(k * (k + 1) / 2, std::move(edges));
}

/**
 * @brief `layers` layers of k vertices with complete bipartite edges between consecutive layers.
 *
 * The family has no random choices; the seed is accepted so every family shares one signature.
 */
inline Dag gen_layered(std::size_t k, std::size_t layers, std::uint64_t /*seed*/ = 0) {
    if (k < 1 || layers < 1) throw std::invalid_argument("layered requires k >= 1 and at least one layer");
    std::vector<Edge> edges;
    edges.reserve(k * k * (layers - 1));
    for (std::size_t l = 0; l + 1 < layers; ++l)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) edges.emplace_back(l * k + a, (l + 1) * k + b);
    return Dag::from_ordered_edges(k * layers, std::move(edges));
}

/**
 * @brief Uniform random DAG used by the cross-check corpus.
 *
 * Edges i -> j (i < j in a hidden order) appear independently with probability `density`. Labels
 * are handed out in shuffled order and the graph is renumbered through topological_order, so the
 * parse path is exercised too.
 */
inline Dag gen_random_dag(std::size_t n, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);

    std::vector<VertexIndex> rank(n);
    std::iota(rank.begin(), rank.end(), VertexIndex{0});
    std::shuffle(rank.begin(), rank.end(), rng);

    RawGraph raw;
    raw.labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) raw.labels[rank[v]] = "v" + std::to_string(v);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) raw.edges.emplace_back(rank[i], rank[j]);
    return to_dag(raw);
}

/// Width every generated graph of this configuration has.
inline std::size_t expected_width(const GenConfig &config) {
    switch (config.family) {
        case Family::chain: return config.n == 0 ? 0 : 1;
        case Family::layered:
        case Family::chain_union:
        case Family::staircase:
        case Family::independent: return config.k;
    }
    return 0;
}

/// For layered graphs n is the vertex budget and the layer count is n / k.
inline Dag generate(const GenConfig &config) {
    switch (config.family) {
        case Family::chain_union: return gen_chain_union(config.k, config.n, config.p, config.seed);
        case Family::layered:
            if (config.k < 1 || config.n < config.k) throw std::invalid_argument("layered requires n >= k >= 1");
            return gen_layered(config.k, config.n / config.k, config.seed);
        case Family::staircase: return gen_staircase(config.k);
        case Family::independent: return gen_independent(config.k);
        case Family::chain: return gen_chain(config.n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace dagwidth

#endif  // DAGWIDTH_GENERATORS_HPP
