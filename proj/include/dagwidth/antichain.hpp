#ifndef DAGWIDTH_ANTICHAIN_HPP
#define DAGWIDTH_ANTICHAIN_HPP

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "dag.hpp"

namespace dagwidth {

/**
 * @brief A set of vertex indices kept in canonical (strictly increasing) order.
 *
 * Pairwise non-reachability is a property of the graph the set came from and is not checked
 * here. Ordering is by size first, then lexicographic, which groups frontier listings by size.
 */
class Antichain {
   public:
    Antichain() = default;

    explicit Antichain(std::vector<VertexIndex> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
            throw std::invalid_argument("antichain members must be distinct");
    }

    Antichain(std::initializer_list<VertexIndex> members) : Antichain(std::vector<VertexIndex>(members)) {}

    /// Adopts an already-sorted, duplicate-free span.
    static Antichain from_sorted(std::span<const VertexIndex> members) {
        Antichain a;
        a.members_.assign(members.begin(), members.end());
        return a;
    }

    std::span<const VertexIndex> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(VertexIndex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

    bool operator==(const Antichain &) const = default;

    std::strong_ordering operator<=>(const Antichain &other) const {
        if (auto c = size() <=> other.size(); c != 0) return c;
        return members_ <=> other.members_;
    }

   private:
    std::vector<VertexIndex> members_;
};

}  // namespace dagwidth

#endif  // DAGWIDTH_ANTICHAIN_HPP
