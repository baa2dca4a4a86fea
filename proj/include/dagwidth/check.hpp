#ifndef DAGWIDTH_CHECK_HPP
#define DAGWIDTH_CHECK_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "frontier.hpp"
#include "oracle.hpp"

namespace dagwidth {

struct CrossCheck {
    bool ok = true;
    std::size_t prefixes = 0;
    /// First disagreement, human readable; empty when ok.
    std::string mismatch;
};

inline std::string describe(const Dag &g, const std::vector<Antichain> &family) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < family.size(); ++i) {
        out << (i ? " {" : "{");
        for (std::size_t j = 0; j < family[i].size(); ++j) out << (j ? " " : "") << g.label(family[i].members()[j]);
        out << '}';
    }
    out << ']';
    return out.str();
}

/**
 * @brief Compares the sweep with the brute-force oracles on every prefix of g.
 *
 * After each step the frontier set must equal the enumerated frontiers of the induced prefix;
 * at the end the width must agree with the matching oracle and with the brute-force right-most
 * maximum antichain. Throws std::length_error when g exceeds the enumeration limit.
 */
inline CrossCheck cross_check(const Dag &g, std::size_t limit = oracle::kDefaultEnumerationLimit) {
    oracle::check_limit(g, limit);
    CrossCheck report;

    std::size_t step = 0;
    auto result = compute_frontiers(g, [&](const FrontierSweep &sweep) {
        ++step;
        if (!report.ok) return;
        auto got = sweep.frontiers().to_antichains();
        auto want = oracle::brute_frontiers(induced_prefix(g, step), limit);
        if (got != want) {
            report.ok = false;
            report.mismatch = "prefix " + std::to_string(step) + ": sweep " + describe(g, got) + " vs oracle " +
                              describe(g, want);
        }
        ++report.prefixes;
    });
    if (!report.ok) return report;

    const std::size_t matching = oracle::width_via_matching(g);
    const Antichain brute = oracle::brute_rightmost_max(g, limit);
    if (result.rightmost.size() != matching || result.rightmost != brute) {
        report.ok = false;
        report.mismatch = "width: sweep " + std::to_string(result.rightmost.size()) + " " +
                          describe(g, {result.rightmost}) + ", matching " + std::to_string(matching) +
                          ", brute force " + describe(g, {brute});
    }
    return report;
}

}  // namespace dagwidth

#endif  // DAGWIDTH_CHECK_HPP
