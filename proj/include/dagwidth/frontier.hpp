#ifndef DAGWIDTH_FRONTIER_HPP
#define DAGWIDTH_FRONTIER_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "antichain.hpp"
#include "dag.hpp"

namespace dagwidth {

/**
 * @brief A family of antichains stored back to back in one buffer.
 *
 * Members of each antichain are strictly increasing. Membership in the family is by value, but
 * the sweep only ever inserts distinct antichains, so no deduplication is done here.
 */
class FrontierSet {
   public:
    std::size_t size() const noexcept { return offsets_.size() - 1; }

    std::span<const VertexIndex> operator[](std::size_t i) const {
        return {members_.data() + offsets_[i], members_.data() + offsets_[i + 1]};
    }

    void clear() {
        members_.clear();
        offsets_.assign(1, 0);
    }

    void push(std::span<const VertexIndex> antichain) {
        members_.insert(members_.end(), antichain.begin(), antichain.end());
        offsets_.push_back(members_.size());
    }

    /// Appends antichain ∪ {v}; v must exceed every member.
    void push_extended(std::span<const VertexIndex> antichain, VertexIndex v) {
        assert(antichain.empty() || antichain.back() < v);
        members_.insert(members_.end(), antichain.begin(), antichain.end());
        members_.push_back(v);
        offsets_.push_back(members_.size());
    }

    /// Canonical sorted copy, including the empty antichain when present.
    std::vector<Antichain> to_antichains() const {
        std::vector<Antichain> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(Antichain::from_sorted((*this)[i]));
        std::sort(out.begin(), out.end());
        return out;
    }

   private:
    std::vector<VertexIndex> members_;
    std::vector<std::size_t> offsets_{0};
};

/**
 * @brief Reachability bits of one vertex towards the vertices processed while it was supported.
 *
 * A vertex enters the support at its own step and, once it leaves, never comes back. Its bits
 * therefore form one contiguous run: bit k answers "does this vertex reach vertex()+k+1". The
 * first 64 bits live inline; longer runs spill to the heap.
 */
class SupportRecord {
   public:
    explicit SupportRecord(VertexIndex vertex) : vertex_(vertex) {}

    VertexIndex vertex() const noexcept { return vertex_; }
    VertexIndex entry_step() const noexcept { return vertex_; }

    /// Number of recorded bits; targets vertex()+1 .. vertex()+length() are answerable.
    std::size_t length() const noexcept { return length_; }

    bool answers(VertexIndex target) const noexcept {
        return target > vertex_ && target - vertex_ <= length_;
    }

    /// Querying a target outside the recorded run is a contract violation; release builds
    /// return false.
    bool reaches(VertexIndex target) const {
        assert(answers(target));
        if (!answers(target)) return false;
        return bit(target - vertex_ - 1);
    }

    void append(bool reached) {
        const std::size_t k = length_++;
        if (k < 64) {
            head_ |= std::uint64_t{reached} << k;
            return;
        }
        const std::size_t word = (k - 64) / 64;
        if (word == tail_.size()) tail_.push_back(0);
        tail_[word] |= std::uint64_t{reached} << ((k - 64) % 64);
    }

   private:
    bool bit(std::size_t k) const {
        if (k < 64) return (head_ >> k) & 1U;
        return (tail_[(k - 64) / 64] >> ((k - 64) % 64)) & 1U;
    }

    VertexIndex vertex_;
    std::uint32_t length_ = 0;
    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> tail_;
};

struct SweepStats {
    /// Largest number of nonempty frontier antichains held after any step.
    std::size_t max_frontier_count = 0;
    std::size_t max_support_size = 0;
    /// Largest antichain ever created, including the one that tripped a width limit.
    std::size_t max_antichain_size = 0;
};

/**
 * @brief Online maintenance of all frontier antichains of a growing DAG.
 *
 * Each call to push() receives the next vertex in topological order (its index is the number of
 * vertices pushed before it) together with its in-neighbours. After the call, frontiers() holds
 * every frontier antichain of the prefix, the empty antichain included, and rightmost() is the
 * unique one of maximum size.
 *
 * Reachability is never computed by traversal. For every step t the sweep stores, for each
 * vertex u supported just before t, whether u reaches vertex t; any query between supported
 * vertices reduces to one of these bits.
 */
class FrontierSweep {
   public:
    FrontierSweep() { frontiers_.push({}); }

    explicit FrontierSweep(std::size_t expected_vertices) : FrontierSweep() {
        records_.reserve(expected_vertices);
        support_pos_.reserve(expected_vertices);
    }

    /// Abort the sweep as soon as an antichain with more than `w` vertices appears.
    void set_width_limit(std::size_t w) { limit_ = w; }
    bool limit_exceeded() const noexcept { return exceeded_; }

    /// Processes the next vertex; returns its index.
    VertexIndex push(std::span<const VertexIndex> in_neighbors) {
        update_reachability(in_neighbors);
        sweep_step();
        return static_cast<VertexIndex>(steps_ - 1);
    }

    /**
     * @brief First half of a step: records, for every currently supported vertex u, whether u
     * reaches the incoming vertex.
     *
     * u reaches v_i iff u is an in-neighbour or u reaches some in-neighbour v_j. In the latter
     * case u < j, and a supported u with u < j was also supported just before step j, so its
     * bit for v_j is already stored.
     */
    void update_reachability(std::span<const VertexIndex> in_neighbors) {
        if (exceeded_) throw std::logic_error("sweep stopped at its width limit");
        if (pending_) throw std::logic_error("update_reachability called twice for one step");
        const auto current = static_cast<VertexIndex>(steps_);

        scratch_.assign(support_.size(), 0);
        for (VertexIndex j : in_neighbors) {
            if (j >= current) throw std::invalid_argument("in-neighbour does not precede the new vertex");
            if (support_pos_[j] != kAbsent) scratch_[support_pos_[j]] = 1;
            for (std::size_t idx = 0; idx < support_.size() && support_[idx] < j; ++idx) {
                if (!scratch_[idx] && records_[support_[idx]].reaches(j)) scratch_[idx] = 1;
            }
        }
        for (std::size_t idx = 0; idx < support_.size(); ++idx) records_[support_[idx]].append(scratch_[idx] != 0);

        records_.emplace_back(current);
        support_pos_.push_back(kAbsent);
        pending_ = true;
    }

    /**
     * @brief Second half of a step: replaces the frontier set of the previous prefix by that of
     * the current one.
     *
     * New frontiers are every old frontier not reaching the new vertex, extended by it. Old
     * frontiers survive unless one of the new ones dominates them.
     */
    void sweep_step() {
        if (!pending_) throw std::logic_error("sweep_step requires update_reachability first");
        const auto current = static_cast<VertexIndex>(steps_);

        next_.clear();
        next_.push({});
        for (std::size_t k = 0; k < frontiers_.size(); ++k) {
            auto a = frontiers_[k];
            if (reaches(a, current)) continue;
            next_.push_extended(a, current);
            stats_.max_antichain_size = std::max(stats_.max_antichain_size, a.size() + 1);
            if (limit_ && a.size() + 1 > *limit_) {
                exceeded_ = true;
                pending_ = false;
                ++steps_;
                return;
            }
        }

        const std::size_t type1_end = next_.size();
        for (std::size_t k = 0; k < frontiers_.size(); ++k) {
            auto a = frontiers_[k];
            bool dominated = false;
            for (std::size_t b = 0; b < type1_end && !dominated; ++b) dominated = dominates(next_[b], a);
            if (!dominated) next_.push(a);
        }

        std::swap(frontiers_, next_);
        rebuild_support();
        pending_ = false;
        ++steps_;
    }

    /// Does some member of `a` reach vertex t? A vertex reaches itself.
    bool reaches(std::span<const VertexIndex> a, VertexIndex t) const {
        for (VertexIndex s : a) {
            if (s == t) return true;
            if (s < t && records_[s].reaches(t)) return true;
        }
        return false;
    }

    /// Equal sizes and every member of b reached by a.
    bool dominates(std::span<const VertexIndex> b, std::span<const VertexIndex> a) const {
        if (a.size() != b.size()) return false;
        for (VertexIndex v : b)
            if (!reaches(a, v)) return false;
        return true;
    }

    /// Number of vertices processed, counting one that tripped the width limit.
    std::size_t steps() const noexcept { return steps_; }
    const FrontierSet &frontiers() const noexcept { return frontiers_; }

    /// Union of all current frontiers, ascending.
    std::span<const VertexIndex> support() const noexcept { return support_; }
    bool in_support(VertexIndex v) const { return support_pos_[v] != kAbsent; }

    /// Records exist for every vertex pushed so far and are never discarded.
    const SupportRecord &record(VertexIndex v) const { return records_.at(v); }

    std::span<const VertexIndex> rightmost() const { return frontiers_[best_]; }
    const SweepStats &stats() const noexcept { return stats_; }

   private:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

    void rebuild_support() {
        for (VertexIndex v : support_) support_pos_[v] = kAbsent;
        support_.clear();
        best_ = 0;
        for (std::size_t k = 0; k < frontiers_.size(); ++k) {
            auto a = frontiers_[k];
            if (a.size() > frontiers_[best_].size()) best_ = k;
            for (VertexIndex v : a) {
                if (support_pos_[v] == kAbsent) {
                    support_pos_[v] = 0;
                    support_.push_back(v);
                }
            }
        }
        std::sort(support_.begin(), support_.end());
        for (std::size_t idx = 0; idx < support_.size(); ++idx) support_pos_[support_[idx]] = static_cast<std::uint32_t>(idx);

        stats_.max_frontier_count = std::max(stats_.max_frontier_count, frontiers_.size() - 1);
        stats_.max_support_size = std::max(stats_.max_support_size, support_.size());
    }

    FrontierSet frontiers_;
    FrontierSet next_;
    std::vector<SupportRecord> records_;
    std::vector<VertexIndex> support_;
    std::vector<std::uint32_t> support_pos_;
    std::vector<char> scratch_;
    std::size_t best_ = 0;
    std::size_t steps_ = 0;
    bool pending_ = false;
    std::optional<std::size_t> limit_;
    bool exceeded_ = false;
    SweepStats stats_;
};

struct FrontierResult {
    /// All frontier antichains of the whole graph, empty one included, sorted by size.
    std::vector<Antichain> frontiers;
    Antichain rightmost;
    SweepStats stats;
};

/// Sweeps g, calling on_step(sweep) after every vertex.
template <typename StepObserver>
FrontierResult compute_frontiers(const Dag &g, StepObserver &&on_step) {
    FrontierSweep sweep(g.n());
    for (VertexIndex v = 0; v < g.n(); ++v) {
        sweep.push(g.in_neighbors(v));
        on_step(std::as_const(sweep));
    }
    return {sweep.frontiers().to_antichains(), Antichain::from_sorted(sweep.rightmost()), sweep.stats()};
}

inline FrontierResult compute_frontiers(const Dag &g) {
    return compute_frontiers(g, [](const FrontierSweep &) {});
}

struct WidthResult {
    std::size_t width = 0;
    /// The right-most maximum antichain.
    Antichain antichain;
    SweepStats stats;
};

inline WidthResult compute_width(const Dag &g) {
    FrontierSweep sweep(g.n());
    for (VertexIndex v = 0; v < g.n(); ++v) sweep.push(g.in_neighbors(v));
    auto r = sweep.rightmost();
    return {r.size(), Antichain::from_sorted(r), sweep.stats()};
}

struct WidthDecision {
    bool at_most = true;
    /// Vertices processed before the answer was known.
    std::size_t steps = 0;
    std::size_t max_antichain_size = 0;
};

/// Decides width(g) <= w, stopping at the first antichain of size w + 1.
inline WidthDecision decide_width(const Dag &g, std::size_t w) {
    FrontierSweep sweep(g.n());
    sweep.set_width_limit(w);
    for (VertexIndex v = 0; v < g.n() && !sweep.limit_exceeded(); ++v) sweep.push(g.in_neighbors(v));
    return {!sweep.limit_exceeded(), sweep.steps(), sweep.stats().max_antichain_size};
}

inline bool decide_width_at_most(const Dag &g, std::size_t w) { return decide_width(g, w).at_most; }

}  // namespace dagwidth

#endif  // DAGWIDTH_FRONTIER_HPP
