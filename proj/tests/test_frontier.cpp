#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "dagwidth/frontier.hpp"
#include "dagwidth/generators.hpp"
#include "dagwidth/oracle.hpp"

namespace dagwidth {
namespace {

Antichain by_label(const Dag &g, std::initializer_list<const char *> labels) {
    std::vector<VertexIndex> members;
    for (const char *l : labels) members.push_back(*g.index_of(l));
    return Antichain(std::move(members));
}

std::vector<Antichain> family(const Dag &g, std::initializer_list<std::initializer_list<const char *>> sets) {
    std::vector<Antichain> out;
    for (auto s : sets) out.push_back(by_label(g, s));
    std::sort(out.begin(), out.end());
    return out;
}

/// Sweep over the first `count` vertices of g.
FrontierSweep sweep_prefix(const Dag &g, std::size_t count) {
    FrontierSweep sweep;
    for (VertexIndex v = 0; v < count; ++v) sweep.push(g.in_neighbors(v));
    return sweep;
}

TEST(Reaches, EmptyAntichainReachesNothing) {
    Dag g = parse_edge_list("a b");
    FrontierSweep sweep = sweep_prefix(g, 2);
    EXPECT_FALSE(sweep.reaches({}, 1));
}

TEST(Reaches, VertexReachesItself) {
    Dag g = parse_edge_list("a\nb");
    FrontierSweep sweep = sweep_prefix(g, 2);
    const VertexIndex b = 1;
    EXPECT_TRUE(sweep.reaches(std::vector<VertexIndex>{b}, b));
}

TEST(Reaches, ChainThroughSupport) {
    Dag g = parse_edge_list("a b\nb c");
    FrontierSweep sweep = sweep_prefix(g, 2);
    EXPECT_EQ(std::vector<VertexIndex>(sweep.support().begin(), sweep.support().end()), std::vector<VertexIndex>{1});
    sweep.update_reachability(g.in_neighbors(2));
    EXPECT_TRUE(sweep.reaches(std::vector<VertexIndex>{1}, 2));
}

TEST(Dominates, SingleEdge) {
    Dag g = parse_edge_list("a b");
    FrontierSweep sweep = sweep_prefix(g, 2);
    const std::vector<VertexIndex> a{0}, b{1};
    // vertex a left the support at step 2, but its bit for b was recorded before
    EXPECT_TRUE(sweep.dominates(b, a));
    EXPECT_FALSE(sweep.dominates(a, b));
}

TEST(Dominates, SizesMustMatch) {
    Dag g = parse_edge_list("x\ny\nz");
    FrontierSweep sweep = sweep_prefix(g, 3);
    EXPECT_FALSE(sweep.dominates(std::vector<VertexIndex>{0, 1}, std::vector<VertexIndex>{2}));
    EXPECT_FALSE(sweep.dominates(std::vector<VertexIndex>{2}, std::vector<VertexIndex>{0, 1}));
}

TEST(UpdateReachability, FirstStepHasNoBits) {
    FrontierSweep sweep;
    sweep.update_reachability({});
    EXPECT_EQ(sweep.record(0).length(), 0u);
    sweep.sweep_step();
    EXPECT_EQ(sweep.record(0).length(), 0u);
}

TEST(UpdateReachability, DirectEdge) {
    Dag g = parse_edge_list("a b");
    FrontierSweep sweep = sweep_prefix(g, 1);
    sweep.update_reachability(g.in_neighbors(1));
    EXPECT_EQ(sweep.record(0).length(), 1u);
    EXPECT_TRUE(sweep.record(0).reaches(1));
}

TEST(UpdateReachability, DiamondLastStep) {
    Dag g = testing::diamond();
    const VertexIndex v1 = 0, v2 = 1, v3 = 2, v4 = 3;
    FrontierSweep sweep = sweep_prefix(g, 3);
    EXPECT_EQ(std::vector<VertexIndex>(sweep.support().begin(), sweep.support().end()),
              (std::vector<VertexIndex>{v2, v3}));
    sweep.update_reachability(g.in_neighbors(v4));
    EXPECT_TRUE(sweep.record(v2).reaches(v4));
    EXPECT_TRUE(sweep.record(v3).reaches(v4));
    // vertex 1 was only supported before step 2
    EXPECT_EQ(sweep.record(v1).length(), 1u);
    EXPECT_TRUE(sweep.record(v1).reaches(v2));
    EXPECT_FALSE(sweep.record(v1).answers(v4));
    // 2 was supported before step 3 and does not reach 3
    EXPECT_FALSE(sweep.record(v2).reaches(v3));
}

TEST(UpdateReachability, RejectsForwardNeighbour) {
    FrontierSweep sweep;
    sweep.push({});
    EXPECT_THROW(sweep.update_reachability(std::vector<VertexIndex>{1}), std::invalid_argument);
}

TEST(UpdateReachability, StepsMustAlternate) {
    FrontierSweep sweep;
    EXPECT_THROW(sweep.sweep_step(), std::logic_error);
    sweep.update_reachability({});
    EXPECT_THROW(sweep.update_reachability({}), std::logic_error);
}

TEST(SweepStep, DiamondTypeOneAndTwo) {
    Dag g = testing::diamond();
    FrontierSweep sweep = sweep_prefix(g, 3);
    EXPECT_EQ(sweep.frontiers().to_antichains(), family(g, {{}, {"2"}, {"3"}, {"2", "3"}}));
    sweep.push(g.in_neighbors(3));
    EXPECT_EQ(sweep.frontiers().to_antichains(), family(g, {{}, {"4"}, {"2", "3"}}));
    EXPECT_EQ(Antichain::from_sorted(sweep.rightmost()), by_label(g, {"2", "3"}));
}

TEST(SweepStep, IsolatedVerticesKeepEverySubset) {
    const std::size_t k = 6;
    Dag g = gen_independent(k);
    FrontierSweep sweep;
    for (VertexIndex v = 0; v < k; ++v) {
        sweep.push(g.in_neighbors(v));
        EXPECT_EQ(sweep.frontiers().size(), std::size_t{1} << (v + 1));
    }
}

TEST(SweepStep, ChainKeepsOnlyTheSink) {
    Dag g = parse_edge_list("a b");
    FrontierSweep sweep = sweep_prefix(g, 2);
    EXPECT_EQ(sweep.frontiers().to_antichains(), family(g, {{}, {"b"}}));
}

TEST(ComputeFrontiers, EmptyGraph) {
    auto r = compute_frontiers(Dag{});
    EXPECT_EQ(r.frontiers, std::vector<Antichain>{Antichain{}});
    EXPECT_TRUE(r.rightmost.empty());
}

TEST(ComputeFrontiers, ChainOfThree) {
    Dag g = parse_edge_list("a b\nb c");
    auto r = compute_frontiers(g);
    EXPECT_EQ(r.frontiers, family(g, {{}, {"c"}}));
    EXPECT_EQ(r.rightmost, by_label(g, {"c"}));
}

TEST(ComputeFrontiers, StaircaseOfTwo) {
    Dag g = parse_edge_list("a c\nb c");
    auto r = compute_frontiers(g);
    EXPECT_EQ(r.frontiers, family(g, {{}, {"c"}, {"a", "b"}}));
    EXPECT_EQ(r.rightmost, by_label(g, {"a", "b"}));
}

TEST(ComputeWidth, Examples) {
    Dag diamond = testing::diamond();
    auto r = compute_width(diamond);
    EXPECT_EQ(r.width, 2u);
    EXPECT_EQ(r.antichain, by_label(diamond, {"2", "3"}));

    Dag three = parse_edge_list("x\ny\nz");
    EXPECT_EQ(compute_width(three).width, 3u);
    EXPECT_EQ(compute_width(three).antichain, by_label(three, {"x", "y", "z"}));

    Dag one = parse_edge_list("v");
    EXPECT_EQ(compute_width(one).width, 1u);
    EXPECT_EQ(compute_width(one).antichain, by_label(one, {"v"}));
}

TEST(ComputeWidth, RightmostIsNotTheFirstMaximumFound) {
    // {a, b} is found first; {c, d} lies further right
    Dag g = parse_edge_list("a\nb\na c\nb d\n");
    EXPECT_EQ(compute_width(g).antichain, by_label(g, {"c", "d"}));
}

TEST(DecideWidth, Examples) {
    EXPECT_TRUE(decide_width_at_most(gen_chain(100), 1));
    EXPECT_TRUE(decide_width_at_most(testing::diamond(), 2));
    EXPECT_FALSE(decide_width_at_most(testing::diamond(), 1));

    auto d = decide_width(gen_independent(5), 2);
    EXPECT_FALSE(d.at_most);
    EXPECT_LE(d.steps, 3u);
    EXPECT_EQ(d.max_antichain_size, 3u);
}

TEST(DecideWidth, ZeroOnlyForEmpty) {
    EXPECT_TRUE(decide_width_at_most(Dag{}, 0));
    EXPECT_FALSE(decide_width_at_most(gen_independent(1), 0));
}

TEST(Streaming, StoppedSweepRejectsMoreVertices) {
    FrontierSweep sweep;
    sweep.set_width_limit(1);
    sweep.push({});
    sweep.push({});
    EXPECT_TRUE(sweep.limit_exceeded());
    EXPECT_THROW(sweep.push({}), std::logic_error);
}

TEST(Streaming, UnsortedDuplicateInNeighbours) {
    FrontierSweep sweep;
    sweep.push({});
    sweep.push({});
    sweep.push(std::vector<VertexIndex>{1, 0, 1});
    EXPECT_EQ(Antichain::from_sorted(sweep.rightmost()), (Antichain{0, 1}));
    EXPECT_TRUE(sweep.record(0).reaches(2));
    EXPECT_TRUE(sweep.record(1).reaches(2));
}

TEST(SupportRecord, LongRunsSpillPastInlineBits) {
    // vertex 0 is isolated, so it stays supported alongside every chain vertex
    std::vector<Edge> edges;
    for (VertexIndex v = 2; v < 300; ++v) edges.emplace_back(v - 1, v);
    Dag g = Dag::from_ordered_edges(300, edges);
    FrontierSweep sweep;
    for (VertexIndex v = 0; v < g.n(); ++v) sweep.push(g.in_neighbors(v));
    EXPECT_EQ(sweep.record(0).length(), 299u);
    for (VertexIndex t = 1; t < 300; ++t) EXPECT_FALSE(sweep.record(0).reaches(t));
    EXPECT_EQ(compute_width(g).width, 2u);
}

TEST(SupportRecord, BitsPastInlineWordAreStoredExactly) {
    SupportRecord rec(10);
    std::vector<bool> pattern;
    for (int i = 0; i < 200; ++i) pattern.push_back((i * 7) % 3 == 0);
    for (bool b : pattern) rec.append(b);
    ASSERT_EQ(rec.length(), 200u);
    for (std::size_t i = 0; i < pattern.size(); ++i) EXPECT_EQ(rec.reaches(static_cast<VertexIndex>(11 + i)), pattern[i]);
}

// Properties checked against the brute-force oracle on the small corpus.

class SweepProperties : public ::testing::Test {
   protected:
    static void SetUpTestSuite() { corpus_ = new std::vector<Dag>(testing::small_corpus(300)); }
    static void TearDownTestSuite() { delete corpus_; }
    static std::vector<Dag> *corpus_;
};
std::vector<Dag> *SweepProperties::corpus_ = nullptr;

TEST_F(SweepProperties, EveryPrefixMatchesOracle) {
    for (const Dag &g : *corpus_) {
        std::size_t step = 0;
        compute_frontiers(g, [&](const FrontierSweep &sweep) {
            ++step;
            EXPECT_EQ(sweep.frontiers().to_antichains(), oracle::brute_frontiers(induced_prefix(g, step)));
        });
    }
}

TEST_F(SweepProperties, UniqueMaximumAndCardinalityBound) {
    for (const Dag &g : *corpus_) {
        std::size_t step = 0;
        compute_frontiers(g, [&](const FrontierSweep &sweep) {
            ++step;
            auto all = sweep.frontiers().to_antichains();
            const std::size_t top = all.back().size();
            EXPECT_EQ(std::count_if(all.begin(), all.end(), [&](const Antichain &a) { return a.size() == top; }), 1);
            EXPECT_EQ(sweep.rightmost().size(), top);
            const std::size_t prefix_width = oracle::width_via_matching(induced_prefix(g, step));
            EXPECT_LE(all.size(), std::size_t{1} << prefix_width);
        });
    }
}

TEST_F(SweepProperties, TypeDecomposition) {
    for (const Dag &g : *corpus_) {
        std::set<Antichain> previous{Antichain{}};
        VertexIndex current = 0;
        compute_frontiers(g, [&](const FrontierSweep &sweep) {
            std::set<Antichain> now;
            for (const auto &a : sweep.frontiers().to_antichains()) {
                now.insert(a);
                if (a.contains(current)) {
                    std::vector<VertexIndex> rest(a.begin(), a.end() - 1);
                    EXPECT_TRUE(previous.count(Antichain(rest)));
                } else {
                    EXPECT_TRUE(previous.count(a));
                }
            }
            previous = std::move(now);
            ++current;
        });
    }
}

TEST_F(SweepProperties, SupportIsUnionAndIntervals) {
    for (const Dag &g : *corpus_) {
        std::vector<int> left_at(g.n(), -1);
        std::size_t step = 0;
        compute_frontiers(g, [&](const FrontierSweep &sweep) {
            std::set<VertexIndex> uni;
            for (const auto &a : sweep.frontiers().to_antichains()) uni.insert(a.begin(), a.end());
            EXPECT_EQ(std::vector<VertexIndex>(uni.begin(), uni.end()),
                      std::vector<VertexIndex>(sweep.support().begin(), sweep.support().end()));
            EXPECT_TRUE(sweep.in_support(static_cast<VertexIndex>(step)));
            for (VertexIndex v = 0; v <= step; ++v) {
                if (sweep.in_support(v)) {
                    EXPECT_EQ(left_at[v], -1) << "vertex " << v << " re-entered the support";
                } else if (left_at[v] == -1) {
                    left_at[v] = static_cast<int>(step);
                }
            }
            ++step;
        });
    }
}

TEST_F(SweepProperties, ReachBitsMatchClosure) {
    for (const Dag &g : *corpus_) {
        FrontierSweep sweep;
        for (VertexIndex v = 0; v < g.n(); ++v) sweep.push(g.in_neighbors(v));
        auto closure = oracle::transitive_closure(g);
        for (VertexIndex u = 0; u < g.n(); ++u) {
            const auto &rec = sweep.record(u);
            for (VertexIndex t = u + 1; t <= u + rec.length(); ++t) EXPECT_EQ(rec.reaches(t), closure(u, t));
        }
    }
}

TEST_F(SweepProperties, DecisionAgreesWithWidth) {
    for (const Dag &g : *corpus_) {
        const std::size_t k = compute_width(g).width;
        for (std::size_t w = 0; w <= 11; ++w) EXPECT_EQ(decide_width_at_most(g, w), k <= w);
    }
}

}  // namespace
}  // namespace dagwidth
