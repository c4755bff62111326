#include "lczmbt/lcz.hpp"

#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace lczmbt {
namespace {

using Ids = std::vector<std::string>;

TEST(ThresholdTest, Range) {
    EXPECT_NO_THROW(Threshold(0.0));
    EXPECT_NO_THROW(Threshold(1.0));
    EXPECT_THROW(Threshold(-0.1), Error);
    EXPECT_THROW(Threshold(1.01), Error);
}

TEST(ComputeLczsTest, G1SingleZone) {
    const ProcessGraph g(testing::g1());
    const auto report = compute_lczs(g, Threshold(0.5));
    ASSERT_EQ(report.zones.size(), 1u);
    const auto& z = report.zones[0];
    EXPECT_EQ(z.zone_id, 1);
    EXPECT_EQ(z.members, (Ids{"n3", "n4"}));
    EXPECT_EQ(z.entries, (Ids{"n3"}));
    EXPECT_EQ(z.exits, (Ids{"n5"}));
    EXPECT_TRUE(report.warnings.empty());
}

TEST(ComputeLczsTest, StrictComparisonAtBoundary) {
    const ProcessGraph g(testing::g1());
    const auto report = compute_lczs(g, Threshold(0.9));
    EXPECT_TRUE(report.zones.empty());
    EXPECT_TRUE(report.has_warning("NO_ZONES"));
}

TEST(ComputeLczsTest, ThreeSubsystemsHaveOneZone) {
    const auto m = testing::three_subsystems();
    const ProcessGraph g(m);
    const auto report = compute_lczs(g, Threshold(0.5));
    ASSERT_EQ(report.zones.size(), 1u);
    Ids subsystem3;
    for (const auto& n : m.nodes)
        if (n.id.starts_with("s3_")) subsystem3.push_back(n.id);
    std::sort(subsystem3.begin(), subsystem3.end());
    EXPECT_EQ(report.zones[0].members, subsystem3);
    EXPECT_EQ(report.zones[0].entries, (Ids{"s3_sense"}));
    EXPECT_EQ(report.zones[0].exits, (Ids{"s1_merge"}));
    const auto oracle = testing::oracle::zones(m, 0.5);
    ASSERT_EQ(oracle.size(), 1u);
    EXPECT_EQ(Ids(oracle[0].members.begin(), oracle[0].members.end()), subsystem3);
}

TEST(ComputeLczsTest, StartInsideZoneIsAnEntry) {
    auto m = testing::g1();
    m.nodes[0].outage_probability = 0.9;  // n1
    const ProcessGraph g(m);
    const auto report = compute_lczs(g, Threshold(0.5));
    ASSERT_EQ(report.zones.size(), 2u);
    EXPECT_EQ(report.zones[0].members, (Ids{"n1"}));
    EXPECT_EQ(report.zones[0].entries, (Ids{"n1"}));
    EXPECT_EQ(report.zones[0].exits, (Ids{"n2"}));
}

TEST(ComputeLczsTest, ZoneHoldingTheEndHasNoRestorationPath) {
    auto m = testing::g1();
    m.nodes[4].outage_probability = 0.9;  // n5
    const ProcessGraph g(m);
    const auto report = compute_lczs(g, Threshold(0.5));
    ASSERT_EQ(report.zones.size(), 1u);
    EXPECT_EQ(report.zones[0].members, (Ids{"n3", "n4", "n5"}));
    EXPECT_EQ(report.zones[0].entries, (Ids{"n3", "n5"}));
    EXPECT_TRUE(report.zones[0].exits.empty());
    EXPECT_TRUE(report.has_warning("ZONE_WITHOUT_RESTORATION_PATH"));
}

TEST(ComputeLczsTest, ExitLeadsIntoSecondZone) {
    // An exit is always online: an offline successor would join the zone.
    // Zone {a} is restored at m, which then enters zone {c}.
    ProcessModel m;
    m.nodes = {testing::node("s", 0.0), testing::node("a", 0.9), testing::node("m", 0.0),
               testing::node("c", 0.9), testing::node("t", 0.0)};
    m.transitions = {{"s", "a", ""}, {"a", "m", ""}, {"m", "c", ""}, {"c", "t", ""}};
    m.start = "s";
    m.ends = {"t"};
    const auto report = compute_lczs(ProcessGraph(m), Threshold(0.5));
    ASSERT_EQ(report.zones.size(), 2u);
    EXPECT_EQ(report.zones[0].members, (Ids{"a"}));
    EXPECT_EQ(report.zones[1].members, (Ids{"c"}));
    EXPECT_EQ(report.zones[0].exits, (Ids{"m"}));
    EXPECT_EQ(report.zones[1].entries, (Ids{"c"}));
    EXPECT_EQ(report.zones[1].exits, (Ids{"t"}));
}

TEST(ZoneSegmentsTest, G1) {
    const ProcessGraph g(testing::g1());
    const auto report = compute_lczs(g, Threshold(0.5));
    const auto segments = zone_segments(g, report.zones[0]);
    ASSERT_EQ(segments.size(), 1u);
    EXPECT_EQ(segments.at({"n3", "n5"}), (Ids{"n3", "n4", "n5"}));
}

TEST(ZoneSegmentsTest, OneHopZone) {
    ProcessModel m;
    m.nodes = {testing::node("s", 0.0), testing::node("m", 0.9), testing::node("x", 0.0)};
    m.transitions = {{"s", "m", ""}, {"m", "x", ""}};
    m.start = "s";
    m.ends = {"x"};
    const ProcessGraph g(m);
    const auto report = compute_lczs(g, Threshold(0.5));
    const auto segments = zone_segments(g, report.zones.at(0));
    EXPECT_EQ(segments.at({"m", "x"}), (Ids{"m", "x"}));
}

TEST(ZoneSegmentsTest, G2FourSegments) {
    const ProcessGraph g(testing::g2());
    const auto report = compute_lczs(g, Threshold(0.5));
    ASSERT_EQ(report.zones.size(), 1u);
    EXPECT_EQ(report.zones[0].entries, (Ids{"a", "b"}));
    EXPECT_EQ(report.zones[0].exits, (Ids{"x", "y"}));
    const auto segments = zone_segments(g, report.zones[0]);
    ASSERT_EQ(segments.size(), 4u);
    EXPECT_EQ(segments.at({"a", "x"}), (Ids{"a", "c", "x"}));
    EXPECT_EQ(segments.at({"a", "y"}), (Ids{"a", "c", "y"}));
    EXPECT_EQ(segments.at({"b", "x"}), (Ids{"b", "c", "x"}));
    EXPECT_EQ(segments.at({"b", "y"}), (Ids{"b", "c", "y"}));
}

TEST(ZoneSegmentsTest, LexicographicTieBreak) {
    // Two interior routes of equal length from e to x: via p and via q.
    ProcessModel m;
    m.nodes = {testing::node("s", 0.0), testing::node("e", 0.9), testing::node("q", 0.9),
               testing::node("p", 0.9), testing::node("x", 0.0)};
    m.transitions = {{"s", "e", ""}, {"e", "q", ""}, {"e", "p", ""}, {"q", "x", ""}, {"p", "x", ""}};
    m.start = "s";
    m.ends = {"x"};
    const ProcessGraph g(m);
    const auto segments = zone_segments(g, compute_lczs(g, Threshold(0.5)).zones.at(0));
    EXPECT_EQ(segments.at({"e", "x"}), (Ids{"e", "p", "x"}));
}

TEST(ZoneSegmentsTest, InteriorConstraintMakesPairsInfeasible) {
    // e1 has no interior route to o.
    ProcessModel m;
    m.nodes = {testing::node("s", 0.0), testing::node("e1", 0.9), testing::node("e2", 0.9),
               testing::node("o", 0.0), testing::node("x", 0.0), testing::node("t", 0.0)};
    m.transitions = {{"s", "e1", ""}, {"s", "e2", ""}, {"e2", "e1", ""}, {"e1", "x", ""},
                     {"x", "t", ""},  {"e2", "o", ""}, {"o", "t", ""}};
    m.start = "s";
    m.ends = {"t"};
    const ProcessGraph g(m);
    const auto report = compute_lczs(g, Threshold(0.5));
    const auto segments = zone_segments(g, report.zones.at(0));
    EXPECT_EQ(segments.at({"e1", "x"}), (Ids{"e1", "x"}));
    EXPECT_EQ(segments.at({"e2", "x"}), (Ids{"e2", "e1", "x"}));
    EXPECT_EQ(segments.at({"e2", "o"}), (Ids{"e2", "o"}));
    EXPECT_FALSE(segments.at({"e1", "o"}).has_value());
}

// Property checks over the random corpus.

TEST(LczPropertyTest, AgreesWithUnionFindOracle) {
    for (const auto& entry : testing::corpus(500)) {
        const ProcessGraph g(entry.model);
        for (double t : {0.5, 0.04, 0.8}) {
            const auto report = compute_lczs(g, Threshold(t));
            const auto expected = testing::oracle::zones(entry.model, t);
            ASSERT_EQ(report.zones.size(), expected.size()) << "model " << entry.index;
            for (std::size_t k = 0; k < expected.size(); ++k) {
                EXPECT_EQ(report.zones[k].zone_id, static_cast<int>(k) + 1);
                EXPECT_EQ(report.zones[k].members, Ids(expected[k].members.begin(), expected[k].members.end()));
                EXPECT_EQ(report.zones[k].entries, Ids(expected[k].entries.begin(), expected[k].entries.end()));
                EXPECT_EQ(report.zones[k].exits, Ids(expected[k].exits.begin(), expected[k].exits.end()));
            }
        }
    }
}

TEST(LczPropertyTest, PartitionAndBorderInvariants) {
    for (const auto& entry : testing::corpus(200)) {
        const ProcessGraph g(entry.model);
        const Threshold t(0.5);
        const auto report = compute_lczs(g, t);
        std::map<std::string, int> owner;
        for (const auto& z : report.zones) {
            EXPECT_FALSE(z.members.empty());
            EXPECT_FALSE(z.entries.empty());
            for (const auto& id : z.members) EXPECT_TRUE(owner.emplace(id, z.zone_id).second) << id;
            for (const auto& e : z.entries) {
                EXPECT_TRUE(z.has_member(e));
                EXPECT_GT(g.outage_probability(g.index_of(e)), t.value());
            }
            for (const auto& x : z.exits) {
                EXPECT_FALSE(z.has_member(x));
                EXPECT_LE(g.outage_probability(g.index_of(x)), t.value());
            }
        }
        for (ProcessGraph::Index v = 0; v < g.size(); ++v)
            EXPECT_EQ(owner.count(g.id(v)) == 1, t.exceeded_by(g.outage_probability(v)));
    }
}

TEST(LczPropertyTest, ZoneUnionShrinksWithThreshold) {
    for (const auto& entry : testing::corpus(100)) {
        const ProcessGraph g(entry.model);
        auto members = [&](double t) {
            std::set<std::string> out;
            for (const auto& z : compute_lczs(g, Threshold(t)).zones) out.insert(z.members.begin(), z.members.end());
            return out;
        };
        std::set<std::string> previous = members(0.0);
        for (double t : {0.01, 0.05, 0.3, 0.5, 0.79, 0.8, 0.95, 1.0}) {
            const auto current = members(t);
            EXPECT_TRUE(std::includes(previous.begin(), previous.end(), current.begin(), current.end()));
            previous = current;
        }
    }
}

TEST(LczPropertyTest, SegmentsAreShortestInteriorWalks) {
    for (const auto& entry : testing::corpus(150)) {
        const ProcessGraph g(entry.model);
        const auto report = compute_lczs(g, Threshold(0.5));
        for (const auto& z : report.zones) {
            const auto oracle_zone = testing::oracle::zones(entry.model, 0.5).at(static_cast<std::size_t>(z.zone_id - 1));
            for (const auto& [pair, segment] : zone_segments(g, z)) {
                const auto& [e, x] = pair;
                EXPECT_EQ(segment.has_value(), testing::oracle::feasible(entry.model, oracle_zone, e, x));
                if (!segment) continue;
                EXPECT_EQ(segment->front(), e);
                EXPECT_EQ(segment->back(), x);
                for (std::size_t k = 0; k + 1 < segment->size(); ++k) {
                    EXPECT_TRUE(z.has_member((*segment)[k]));
                    EXPECT_TRUE(g.has_edge(g.index_of((*segment)[k]), g.index_of((*segment)[k + 1])));
                }
                // No interior walk is shorter: BFS layer count from e.
                std::set<std::string> frontier{e}, seen{e};
                int layers = 0;
                bool found = false;
                while (!frontier.empty() && !found) {
                    ++layers;
                    std::set<std::string> next;
                    for (const auto& v : frontier) {
                        for (auto s : g.successors(g.index_of(v))) {
                            if (g.id(s) == x) found = true;
                            if (z.has_member(g.id(s)) && seen.insert(g.id(s)).second) next.insert(g.id(s));
                        }
                    }
                    frontier = next;
                }
                EXPECT_EQ(static_cast<int>(segment->size()) - 1, layers);
            }
        }
    }
}

}  // namespace
}  // namespace lczmbt
