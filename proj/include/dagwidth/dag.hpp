#ifndef DAGWIDTH_DAG_HPP
#define DAGWIDTH_DAG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace dagwidth {

/// Dense vertex index. After construction of a Dag, index order is a topological order.
using VertexIndex = std::uint32_t;

using Edge = std::pair<VertexIndex, VertexIndex>;

/// A closed walk through input labels; consecutive pairs (and last -> first) are edges.
struct CycleWitness {
    std::vector<std::string> vertices;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

class CycleError : public std::runtime_error {
   public:
    explicit CycleError(CycleWitness witness)
        : std::runtime_error("graph contains a cycle"), witness_(std::move(witness)) {}

    const CycleWitness &witness() const noexcept { return witness_; }

   private:
    CycleWitness witness_;
};

/**
 * @brief Directed graph as read from input, before topological renumbering.
 *
 * Vertices are numbered by input rank, i.e. the order in which their label first appeared.
 */
struct RawGraph {
    std::vector<std::string> labels;
    std::vector<Edge> edges;
};

/**
 * @brief Immutable DAG whose vertex indices form a topological order.
 *
 * Every edge (u, v) satisfies u < v. In-neighbour lists are sorted and deduplicated and kept in
 * a single compressed array.
 */
class Dag {
   public:
    Dag() : offsets_{0} {}

    /// Builds a Dag from edges that already respect index order. Throws std::invalid_argument
    /// on an out-of-range endpoint or an edge with u >= v.
    static Dag from_ordered_edges(std::vector<std::string> labels, std::vector<Edge> edges) {
        const std::size_t n = labels.size();
        for (const auto &[u, v] : edges) {
            if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (u >= v) throw std::invalid_argument("edge does not respect topological order");
        }
        std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
            return a.second != b.second ? a.second < b.second : a.first < b.first;
        });
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Dag g;
        g.labels_ = std::move(labels);
        g.offsets_.assign(n + 1, 0);
        g.sources_.reserve(edges.size());
        for (const auto &[u, v] : edges) {
            ++g.offsets_[v + 1];
            g.sources_.push_back(u);
        }
        for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
        return g;
    }

    /// Vertices labelled "0", "1", ... in index order.
    static Dag from_ordered_edges(std::size_t n, std::vector<Edge> edges) {
        std::vector<std::string> labels(n);
        for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
        return from_ordered_edges(std::move(labels), std::move(edges));
    }

    std::size_t n() const noexcept { return labels_.size(); }
    std::size_t m() const noexcept { return sources_.size(); }

    std::span<const VertexIndex> in_neighbors(VertexIndex v) const {
        return {sources_.data() + offsets_[v], sources_.data() + offsets_[v + 1]};
    }

    const std::string &label(VertexIndex v) const { return labels_[v]; }
    const std::vector<std::string> &labels() const noexcept { return labels_; }

    /// Linear scan; intended for tests and small graphs.
    std::optional<VertexIndex> index_of(std::string_view label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<VertexIndex>(it - labels_.begin());
    }

    /// All edges, ordered by target then source.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m());
        for (VertexIndex v = 0; v < n(); ++v)
            for (VertexIndex u : in_neighbors(v)) out.emplace_back(u, v);
        return out;
    }

    bool has_edge(VertexIndex u, VertexIndex v) const {
        auto in = in_neighbors(v);
        return std::binary_search(in.begin(), in.end(), u);
    }

   private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexIndex> sources_;
};

namespace internal {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

/// Follows in-edges among the vertices Kahn's algorithm could not emit until a vertex repeats.
inline CycleWitness extract_cycle(const RawGraph &raw, const std::vector<std::size_t> &indegree) {
    const std::size_t n = raw.labels.size();
    std::vector<std::vector<VertexIndex>> in(n);
    for (const auto &[u, v] : raw.edges)
        if (indegree[u] > 0 && indegree[v] > 0) in[v].push_back(u);
    for (auto &list : in) std::sort(list.begin(), list.end());

    VertexIndex start = 0;
    while (indegree[start] == 0) ++start;

    std::vector<VertexIndex> walk;
    std::vector<std::size_t> seen_at(n, SIZE_MAX);
    VertexIndex cur = start;
    while (seen_at[cur] == SIZE_MAX) {
        seen_at[cur] = walk.size();
        walk.push_back(cur);
        // every stuck vertex keeps an in-neighbour that is also stuck
        cur = in[cur].front();
    }
    std::vector<VertexIndex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());

    CycleWitness witness;
    for (VertexIndex v : cycle) witness.vertices.push_back(raw.labels[v]);
    return witness;
}

}  // namespace internal

/**
 * @brief Kahn's algorithm with ties broken by input rank.
 *
 * Returns the vertex sequence in topological order, or a cycle witness when none exists.
 */
inline std::variant<std::vector<VertexIndex>, CycleWitness> topological_order(const RawGraph &raw) {
    const std::size_t n = raw.labels.size();
    std::vector<std::vector<VertexIndex>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto &[u, v] : raw.edges) {
        if (u == v) return CycleWitness{{raw.labels[u]}};
        out[u].push_back(v);
        ++indegree[v];
    }

    std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
    for (VertexIndex v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);

    std::vector<VertexIndex> order;
    order.reserve(n);
    while (!ready.empty()) {
        VertexIndex u = ready.top();
        ready.pop();
        order.push_back(u);
        for (VertexIndex v : out[u])
            if (--indegree[v] == 0) ready.push(v);
    }
    if (order.size() < n) return internal::extract_cycle(raw, indegree);
    return order;
}

/// Renumbers a raw graph into topological order. Throws CycleError.
inline Dag to_dag(const RawGraph &raw) {
    auto result = topological_order(raw);
    if (auto *cycle = std::get_if<CycleWitness>(&result)) throw CycleError(std::move(*cycle));
    const auto &order = std::get<std::vector<VertexIndex>>(result);

    std::vector<VertexIndex> position(order.size());
    std::vector<std::string> labels(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[order[i]] = static_cast<VertexIndex>(i);
        labels[i] = raw.labels[order[i]];
    }
    std::vector<Edge> edges;
    edges.reserve(raw.edges.size());
    for (const auto &[u, v] : raw.edges) edges.emplace_back(position[u], position[v]);
    return Dag::from_ordered_edges(std::move(labels), std::move(edges));
}

/**
 * @brief Reads the edge-list format without ordering it.
 *
 * One "u v" edge or one "v" vertex declaration per line. Blank lines and lines whose first
 * non-blank character is '#' are skipped. Throws ParseError on any other line shape.
 */
inline RawGraph parse_raw_edge_list(std::istream &in) {
    RawGraph raw;
    std::unordered_map<std::string, VertexIndex> index;
    auto intern = [&](std::string_view label) {
        auto [it, inserted] = index.try_emplace(std::string(label), static_cast<VertexIndex>(raw.labels.size()));
        if (inserted) raw.labels.emplace_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = internal::split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() == 1) {
            intern(tokens[0]);
        } else if (tokens.size() == 2) {
            VertexIndex u = intern(tokens[0]);
            VertexIndex v = intern(tokens[1]);
            raw.edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "expected \"u v\" or \"v\", got " + std::to_string(tokens.size()) + " tokens");
        }
    }
    std::sort(raw.edges.begin(), raw.edges.end());
    raw.edges.erase(std::unique(raw.edges.begin(), raw.edges.end()), raw.edges.end());
    return raw;
}

/// Parses and topologically renumbers an edge list. Throws ParseError or CycleError.
inline Dag parse_edge_list(std::istream &in) { return to_dag(parse_raw_edge_list(in)); }

inline Dag parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// The subgraph induced by the first `count` vertices of g. Throws std::out_of_range.
inline Dag induced_prefix(const Dag &g, std::size_t count) {
    if (count > g.n()) throw std::out_of_range("prefix length exceeds vertex count");
    std::vector<std::string> labels(g.labels().begin(), g.labels().begin() + static_cast<std::ptrdiff_t>(count));
    std::vector<Edge> edges;
    for (VertexIndex v = 0; v < count; ++v)
        for (VertexIndex u : g.in_neighbors(v)) edges.emplace_back(u, v);
    return Dag::from_ordered_edges(std::move(labels), std::move(edges));
}

/**
 * @brief Writes g in the edge-list format.
 *
 * Vertices are first mentioned in index order, so reparsing reproduces the same numbering.
 */
inline void write_edge_list(std::ostream &out, const Dag &g) {
    for (VertexIndex v = 0; v < g.n(); ++v) {
        auto in = g.in_neighbors(v);
        if (in.empty()) {
            out << g.label(v) << '\n';
            continue;
        }
        for (VertexIndex u : in) out << g.label(u) << ' ' << g.label(v) << '\n';
    }
}

inline std::string to_edge_list(const Dag &g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace dagwidth

#endif  // DAGWIDTH_DAG_HPP
