#ifndef DAGWIDTH_BENCH_HPP
#define DAGWIDTH_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontier.hpp"
#include "generators.hpp"

namespace dagwidth {

struct BenchRecord {
    GenConfig config;
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t wall_time_ns = 0;
    std::size_t max_frontier_count = 0;
    std::size_t max_support_size = 0;
    /// Width found by the full sweep; in decision mode, the largest antichain observed.
    std::size_t width_found = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "family,k,n,m,seed,wall_time_ns,max_frontier_count,max_support_size,width_found";

/**
 * @brief Times the sweep on each generated graph and keeps the median of `repeats` runs.
 *
 * Generation is excluded from the timing. With `max_width` set, the early-stopping decision
 * variant is timed instead of the full computation.
 */
inline std::vector<BenchRecord> bench_run(std::span<const GenConfig> configs, std::size_t repeats = 5,
                                          std::optional<std::size_t> max_width = std::nullopt) {
    if (repeats == 0) throw std::invalid_argument("repeats must be positive");
    using clock = std::chrono::steady_clock;

    std::vector<BenchRecord> records;
    for (const GenConfig &config : configs) {
        const Dag g = generate(config);
        BenchRecord rec{config, g.n(), g.m()};
        std::vector<std::int64_t> times;
        for (std::size_t r = 0; r < repeats; ++r) {
            FrontierSweep sweep(g.n());
            if (max_width) sweep.set_width_limit(*max_width);
            const auto start = clock::now();
            for (VertexIndex v = 0; v < g.n() && !sweep.limit_exceeded(); ++v) sweep.push(g.in_neighbors(v));
            const auto stop = clock::now();
            times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());

            rec.max_frontier_count = sweep.stats().max_frontier_count;
            rec.max_support_size = sweep.stats().max_support_size;
            rec.width_found = max_width ? sweep.stats().max_antichain_size : sweep.rightmost().size();
        }
        std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
        rec.wall_time_ns = times[times.size() / 2];
        records.push_back(rec);
    }
    return records;
}

inline void write_csv(std::ostream &out, std::span<const BenchRecord> records) {
    out << kBenchCsvHeader << '\n';
    for (const auto &r : records) {
        out << to_string(r.config.family) << ',' << r.config.k << ',' << r.n << ',' << r.m << ',' << r.config.seed
            << ',' << r.wall_time_ns << ',' << r.max_frontier_count << ',' << r.max_support_size << ','
            << r.width_found << '\n';
    }
}

}  // namespace dagwidth

#endif  // DAGWIDTH_BENCH_HPP
