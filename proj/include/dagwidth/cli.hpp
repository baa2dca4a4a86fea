#ifndef DAGWIDTH_CLI_HPP
#define DAGWIDTH_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bench.hpp"
#include "check.hpp"
#include "dag.hpp"
#include "frontier.hpp"
#include "generators.hpp"

namespace dagwidth::cli {

enum ExitCode : int {
    kOk = 0,
    kDecideNo = 1,
    kUsageOrParse = 2,
    kCycle = 3,
    kCheckMismatch = 4,
};

using nlohmann::json;

inline json dag_to_json(const Dag &g) {
    json edges = json::array();
    for (const auto &[u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    return {{"n", g.n()}, {"m", g.m()}, {"edges", std::move(edges)}, {"order", g.labels()}};
}

/// Labels of a, sorted as strings.
inline std::vector<std::string> sorted_labels(const Dag &g, const Antichain &a) {
    std::vector<std::string> labels;
    for (VertexIndex v : a) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    return labels;
}

struct CliConfig {
    std::string input = "-";
    bool json = false;
    std::size_t max_width = 0;
    std::size_t oracle_limit = oracle::kDefaultEnumerationLimit;
    std::optional<std::size_t> random_count;
    std::size_t max_n = 10;
    std::uint64_t seed = 1;
    std::string family = "chain-union";
    std::size_t k = 1;
    std::size_t n = 1;
    double p = 0.0;
    std::size_t repeats = 5;
    std::optional<std::size_t> bench_max_width;
    std::string out = "-";
};

class Runner {
   public:
    Runner(std::istream &in, std::ostream &out, std::ostream &err) : in_(in), out_(out), err_(err) {}

    int run(int argc, const char *const *argv) {
        CLI::App app{"Width and right-most maximum antichain of a DAG by a frontier-antichain sweep", "dagwidth"};
        app.require_subcommand(1);

        auto add_common = [&](CLI::App *sub, bool with_input = true) {
            if (with_input) sub->add_option("input", cfg_.input, "edge-list file, or - for standard input");
            sub->add_flag("--json", cfg_.json, "emit JSON");
        };

        auto *width = app.add_subcommand("width", "print the width and the right-most maximum antichain");
        add_common(width);
        auto *decide = app.add_subcommand("decide", "exit 0 if width <= w, 1 otherwise");
        add_common(decide);
        decide->add_option("--max-width,-w", cfg_.max_width, "w")->required();
        auto *frontiers = app.add_subcommand("frontiers", "list all nonempty frontier antichains");
        add_common(frontiers);
        auto *check = app.add_subcommand("check", "cross-check the sweep against brute-force oracles");
        add_common(check);
        check->add_option("--random", cfg_.random_count, "number of random graphs instead of an input file");
        check->add_option("--max-n", cfg_.max_n, "largest random graph");
        check->add_option("--seed", cfg_.seed, "random seed");
        check->add_option("--oracle-limit", cfg_.oracle_limit, "largest graph the oracle may enumerate");
        auto *gen = app.add_subcommand("gen", "generate a width-controlled DAG");
        add_common(gen, false);
        gen->add_option("--family", cfg_.family, "chain-union | layered | staircase | independent | chain");
        gen->add_option("--k", cfg_.k, "target width");
        gen->add_option("--n", cfg_.n, "vertex count");
        gen->add_option("--p", cfg_.p, "cross-edge probability");
        gen->add_option("--seed", cfg_.seed, "random seed");
        gen->add_option("--out,-o", cfg_.out, "output path, - for standard output");
        auto *bench = app.add_subcommand("bench", "time the sweep on generated graphs, write CSV");
        add_common(bench, false);
        bench->add_option("config", cfg_.input, "JSON array of {family,k,n,p,seed}")->required();
        bench->add_option("--repeats", cfg_.repeats, "timed runs per config (median reported)");
        bench->add_option("--max-width", cfg_.bench_max_width, "time the early-stopping decision instead");
        bench->add_option("--out,-o", cfg_.out, "output path, - for standard output");

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &e) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::ParseError &e) {
            err_ << "error: " << e.what() << '\n';
            return kUsageOrParse;
        }

        try {
            if (width->parsed()) return cmd_width();
            if (decide->parsed()) return cmd_decide();
            if (frontiers->parsed()) return cmd_frontiers();
            if (check->parsed()) return cmd_check();
            if (gen->parsed()) return cmd_gen();
            if (bench->parsed()) return cmd_bench();
        } catch (const ParseError &e) {
            return fail("parse", e.what(), {{"line", e.line()}});
        } catch (const CycleError &e) {
            if (cfg_.json) {
                out_ << json{{"error", "cycle"}, {"cycle", e.witness().vertices}}.dump() << '\n';
            } else {
                err_ << "cycle:";
                for (const auto &label : e.witness().vertices) err_ << ' ' << label;
                err_ << '\n';
            }
            return kCycle;
        } catch (const std::exception &e) {
            return fail("usage", e.what(), json::object());
        }
        return kUsageOrParse;
    }

   private:
    int fail(const std::string &kind, const std::string &message, json extra) {
        if (cfg_.json) {
            extra["error"] = kind;
            extra["message"] = message;
            out_ << extra.dump() << '\n';
        } else {
            err_ << "error: " << message << '\n';
        }
        return kUsageOrParse;
    }

    std::string read_input(const std::string &path) {
        if (path == "-") return {std::istreambuf_iterator<char>(in_), {}};
        std::ifstream file(path);
        if (!file) throw std::runtime_error("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(file), {}};
    }

    Dag read_dag() { return parse_edge_list(read_input(cfg_.input)); }

    /// Runs body against the --out target.
    template <typename Body>
    void with_output(Body &&body) {
        if (cfg_.out == "-") {
            body(out_);
            return;
        }
        std::ofstream file(cfg_.out);
        if (!file) throw std::runtime_error("cannot write '" + cfg_.out + "'");
        body(file);
    }

    int cmd_width() {
        const Dag g = read_dag();
        const WidthResult r = compute_width(g);
        const auto labels = sorted_labels(g, r.antichain);
        if (cfg_.json) {
            out_ << json{{"width", r.width},
                         {"antichain", labels},
                         {"n", g.n()},
                         {"m", g.m()},
                         {"max_frontier_count", r.stats.max_frontier_count}}
                        .dump()
                 << '\n';
        } else {
            out_ << "width: " << r.width << "\nantichain:";
            for (const auto &label : labels) out_ << ' ' << label;
            out_ << '\n';
        }
        return kOk;
    }

    int cmd_decide() {
        const Dag g = read_dag();
        const WidthDecision d = decide_width(g, cfg_.max_width);
        if (cfg_.json) {
            out_ << json{{"at_most", d.at_most}, {"max_width", cfg_.max_width}, {"steps", d.steps}}.dump() << '\n';
        } else {
            out_ << (d.at_most ? "yes" : "no") << '\n';
        }
        return d.at_most ? kOk : kDecideNo;
    }

    int cmd_frontiers() {
        const Dag g = read_dag();
        const FrontierResult r = compute_frontiers(g);
        std::map<std::size_t, std::vector<std::vector<std::string>>> by_size;
        for (const auto &a : r.frontiers)
            if (!a.empty()) by_size[a.size()].push_back(sorted_labels(g, a));
        std::size_t count = 0;
        for (auto &[size, group] : by_size) {
            std::sort(group.begin(), group.end());
            count += group.size();
        }

        if (cfg_.json) {
            json list = json::array();
            for (const auto &[size, group] : by_size)
                for (const auto &labels : group) list.push_back(labels);
            out_ << json{{"count", count}, {"frontiers", std::move(list)}}.dump() << '\n';
            return kOk;
        }
        for (const auto &[size, group] : by_size) {
            out_ << size << ':';
            for (const auto &labels : group) {
                out_ << " {";
                for (std::size_t i = 0; i < labels.size(); ++i) out_ << (i ? " " : "") << labels[i];
                out_ << '}';
            }
            out_ << '\n';
        }
        out_ << "count: " << count << '\n';
        return kOk;
    }

    int report_mismatch(const Dag &g, const CrossCheck &c, std::size_t graph_no) {
        if (cfg_.json) {
            out_ << json{{"ok", false}, {"graph", graph_no}, {"mismatch", c.mismatch}, {"counterexample", dag_to_json(g)}}
                        .dump()
                 << '\n';
        } else {
            out_ << "mismatch in graph " << graph_no << ": " << c.mismatch << "\ncounterexample:\n";
            write_edge_list(out_, g);
        }
        return kCheckMismatch;
    }

    int cmd_check() {
        if (!cfg_.random_count) {
            const Dag g = read_dag();
            const CrossCheck c = cross_check(g, cfg_.oracle_limit);
            if (!c.ok) return report_mismatch(g, c, 1);
            if (cfg_.json)
                out_ << json{{"ok", true}, {"graphs", 1}, {"prefixes", c.prefixes}}.dump() << '\n';
            else
                out_ << "ok (" << c.prefixes << " prefixes)\n";
            return kOk;
        }

        if (cfg_.max_n > cfg_.oracle_limit)
            throw std::invalid_argument("--max-n exceeds --oracle-limit");
        std::mt19937_64 rng(cfg_.seed);
        std::uniform_int_distribution<std::size_t> size(0, cfg_.max_n);
        std::uniform_real_distribution<double> density(0.0, 0.5);
        const std::size_t total = *cfg_.random_count;
        std::size_t prefixes = 0;
        for (std::size_t i = 0; i < total; ++i) {
            const std::size_t n = size(rng);
            const double d = density(rng);
            const Dag g = gen_random_dag(n, d, rng());
            const CrossCheck c = cross_check(g, cfg_.oracle_limit);
            if (!c.ok) return report_mismatch(g, c, i + 1);
            prefixes += c.prefixes;
        }
        if (cfg_.json)
            out_ << json{{"ok", true}, {"graphs", total}, {"prefixes", prefixes}}.dump() << '\n';
        else
            out_ << total << '/' << total << " ok\n";
        return kOk;
    }

    int cmd_gen() {
        const GenConfig config{parse_family(cfg_.family), cfg_.k, cfg_.n, cfg_.p, cfg_.seed};
        const Dag g = generate(config);
        with_output([&](std::ostream &os) {
            if (cfg_.json)
                os << dag_to_json(g).dump() << '\n';
            else
                write_edge_list(os, g);
        });
        return kOk;
    }

    int cmd_bench() {
        const json spec = json::parse(read_input(cfg_.input));
        if (!spec.is_array()) throw std::invalid_argument("bench config must be a JSON array");
        std::vector<GenConfig> configs;
        for (const auto &entry : spec) {
            GenConfig c;
            c.family = parse_family(entry.at("family").get<std::string>());
            c.k = entry.value("k", std::size_t{1});
            c.n = entry.value("n", std::size_t{1});
            c.p = entry.value("p", 0.0);
            c.seed = entry.value("seed", std::uint64_t{0});
            configs.push_back(c);
        }
        const auto records = bench_run(configs, cfg_.repeats, cfg_.bench_max_width);
        with_output([&](std::ostream &os) {
            if (!cfg_.json) {
                write_csv(os, records);
                return;
            }
            json list = json::array();
            for (const auto &r : records)
                list.push_back({{"family", to_string(r.config.family)},
                                {"k", r.config.k},
                                {"n", r.n},
                                {"m", r.m},
                                {"seed", r.config.seed},
                                {"wall_time_ns", r.wall_time_ns},
                                {"max_frontier_count", r.max_frontier_count},
                                {"max_support_size", r.max_support_size},
                                {"width_found", r.width_found}});
            os << list.dump() << '\n';
        });
        return kOk;
    }

    std::istream &in_;
    std::ostream &out_;
    std::ostream &err_;
    CliConfig cfg_;
};

/// args excludes the program name.
inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"dagwidth"};
    for (const auto &a : args) argv.push_back(a.c_str());
    return Runner(in, out, err).run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace dagwidth::cli

#endif  // DAGWIDTH_CLI_HPP
