#ifndef DAGWIDTH_ORACLE_HPP
#define DAGWIDTH_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "antichain.hpp"
#include "dag.hpp"

// Slow, direct reference implementations used to cross-check the sweep. Nothing in here shares
// code with frontier.hpp.

namespace dagwidth::oracle {

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

/// Reflexive reachability as an n x n bit matrix.
class ReachMatrix {
   public:
    explicit ReachMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t n() const noexcept { return n_; }

    bool operator()(VertexIndex u, VertexIndex v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U; }

    void set(VertexIndex u, VertexIndex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

    /// u and v are distinct and neither reaches the other.
    bool incomparable(VertexIndex u, VertexIndex v) const { return u != v && !(*this)(u, v) && !(*this)(v, u); }

   private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Depth-first search from every vertex over out-edges.
inline ReachMatrix transitive_closure(const Dag &g) {
    const std::size_t n = g.n();
    std::vector<std::vector<VertexIndex>> out(n);
    for (const auto &[u, v] : g.edges()) out[u].push_back(v);

    ReachMatrix reach(n);
    std::vector<VertexIndex> stack;
    for (VertexIndex s = 0; s < n; ++s) {
        reach.set(s, s);
        stack.assign(1, s);
        while (!stack.empty()) {
            VertexIndex u = stack.back();
            stack.pop_back();
            for (VertexIndex v : out[u]) {
                if (!reach(s, v)) {
                    reach.set(s, v);
                    stack.push_back(v);
                }
            }
        }
    }
    return reach;
}

inline void check_limit(const Dag &g, std::size_t limit) {
    if (g.n() > limit)
        throw std::length_error("graph has " + std::to_string(g.n()) + " vertices; enumeration limit is " +
                                std::to_string(limit));
}

/// Every antichain of g, the empty one included, in Antichain order. Throws std::length_error
/// when g has more than `limit` vertices.
inline std::vector<Antichain> enumerate_antichains(const Dag &g, std::size_t limit = kDefaultEnumerationLimit) {
    check_limit(g, limit);
    const std::size_t n = g.n();
    const ReachMatrix reach = transitive_closure(g);

    std::vector<Antichain> result;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        std::vector<VertexIndex> members;
        for (VertexIndex v = 0; v < n; ++v)
            if ((subset >> v) & 1U) members.push_back(v);
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a)
            for (std::size_t b = a + 1; b < members.size() && ok; ++b) ok = reach.incomparable(members[a], members[b]);
        if (ok) result.emplace_back(std::move(members));
    }
    std::sort(result.begin(), result.end());
    return result;
}

/// Equal sizes and every member of b reached (reflexively) by some member of a.
inline bool dominates(const ReachMatrix &reach, const Antichain &b, const Antichain &a) {
    if (a.size() != b.size()) return false;
    for (VertexIndex y : b) {
        bool reached = false;
        for (VertexIndex x : a) reached = reached || reach(x, y);
        if (!reached) return false;
    }
    return true;
}

/// Antichains dominated by no other antichain, keyed on a precomputed enumeration.
inline std::vector<Antichain> frontiers_of(const ReachMatrix &reach, const std::vector<Antichain> &antichains) {
    std::map<std::size_t, std::vector<const Antichain *>> by_size;
    for (const auto &a : antichains) by_size[a.size()].push_back(&a);

    std::vector<Antichain> result;
    for (const auto &[size, group] : by_size) {
        for (const Antichain *a : group) {
            bool dominated = false;
            for (const Antichain *b : group)
                if (b != a && dominates(reach, *b, *a)) {
                    dominated = true;
                    break;
                }
            if (!dominated) result.push_back(*a);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline std::vector<Antichain> brute_frontiers(const Dag &g, std::size_t limit = kDefaultEnumerationLimit) {
    auto antichains = enumerate_antichains(g, limit);
    return frontiers_of(transitive_closure(g), antichains);
}

/// The unique maximum-size frontier antichain. Throws std::logic_error if it is not unique.
inline Antichain brute_rightmost_max(const Dag &g, std::size_t limit = kDefaultEnumerationLimit) {
    auto frontiers = brute_frontiers(g, limit);
    // sorted by size, so the largest ones are at the back
    const std::size_t top = frontiers.back().size();
    if (frontiers.size() > 1 && frontiers[frontiers.size() - 2].size() == top)
        throw std::logic_error("maximum-size frontier antichain is not unique");
    return frontiers.back();
}

/**
 * @brief Width as n minus a maximum matching of the split graph of the transitive closure.
 *
 * Left copy of u is joined to right copy of v whenever u properly reaches v. Matching is grown
 * by simple augmenting paths (Kuhn).
 */
inline std::size_t width_via_matching(const Dag &g) {
    const std::size_t n = g.n();
    const ReachMatrix reach = transitive_closure(g);
    std::vector<std::vector<VertexIndex>> adj(n);
    for (VertexIndex u = 0; u < n; ++u)
        for (VertexIndex v = 0; v < n; ++v)
            if (u != v && reach(u, v)) adj[u].push_back(v);

    constexpr VertexIndex kFree = ~VertexIndex{0};
    std::vector<VertexIndex> match_right(n, kFree);
    std::vector<std::size_t> visited(n, 0);
    std::size_t stamp = 0;

    // iterative DFS over alternating paths
    auto augment = [&](VertexIndex root) {
        struct Frame {
            VertexIndex left;
            std::size_t next;
        };
        std::vector<Frame> stack{{root, 0}};
        std::vector<VertexIndex> path_right;
        while (!stack.empty()) {
            Frame &f = stack.back();
            if (f.next == adj[f.left].size()) {
                stack.pop_back();
                if (!path_right.empty() && !stack.empty()) path_right.pop_back();
                continue;
            }
            VertexIndex v = adj[f.left][f.next++];
            if (visited[v] == stamp) continue;
            visited[v] = stamp;
            path_right.push_back(v);
            if (match_right[v] == kFree) {
                for (std::size_t k = 0; k < path_right.size(); ++k) match_right[path_right[k]] = stack[k].left;
                return true;
            }
            stack.push_back({match_right[v], 0});
        }
        return false;
    };

    std::size_t matching = 0;
    for (VertexIndex u = 0; u < n; ++u) {
        ++stamp;
        if (augment(u)) ++matching;
    }
    return n - matching;
}

}  // namespace dagwidth::oracle

#endif  // DAGWIDTH_ORACLE_HPP
