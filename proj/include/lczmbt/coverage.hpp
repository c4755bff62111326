#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lczmbt/error.hpp"
#include "lczmbt/lcz.hpp"
#include "lczmbt/model.hpp"

namespace lczmbt {

enum class CoverageCriterion { each_border_node_once, all_combinations_of_border_nodes };

/// Short names used on the command line and in documents.
inline const char* to_string(CoverageCriterion c) {
    return c == CoverageCriterion::each_border_node_once ? "ebno" : "all-pairs";
}

inline CoverageCriterion parse_criterion(const std::string& s) {
    if (s == "ebno" || s == "each_border_node_once") return CoverageCriterion::each_border_node_once;
    if (s == "all-pairs" || s == "all_combinations_of_border_nodes")
        return CoverageCriterion::all_combinations_of_border_nodes;
    throw Error(codes::kSchemaError, "unknown coverage criterion '" + s + "'", s);
}

/// A tour of `entry` followed, without leaving the zone, by `exit`. For
/// zones without exits `exit` is empty and the pair stands for touring the
/// entry alone.
struct CoveredPair {
    int zone_id = 0;
    std::string entry;
    std::string exit;

    bool operator==(const CoveredPair&) const = default;
    auto operator<=>(const CoveredPair&) const = default;
};

/// Mandatory entry-to-exit segment some test case has to tour.
struct TestRequirement {
    std::string req_id;
    int zone_id = 0;
    std::string entry;
    std::string exit;                  // empty for zones without exits
    std::vector<std::string> segment;  // entry ... exit, or just [entry]

    CoveredPair pair() const { return {zone_id, entry, exit}; }
    bool operator==(const TestRequirement&) const = default;
};

namespace detail {

struct PairCover {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (entry, exit) positions
};

/// Minimum edge cover of a bipartite graph in which every vertex has at
/// least one edge: a maximum matching plus, for every unmatched vertex, its
/// first admissible partner. Its size is |entries| + |exits| - |matching|.
inline PairCover minimum_pair_cover(std::size_t entries, std::size_t exits,
                                    const std::vector<std::vector<std::size_t>>& admissible) {
    std::vector<long> exit_mate(exits, -1);
    std::vector<long> entry_mate(entries, -1);
    std::vector<bool> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t e) {
        for (auto x : admissible[e]) {
            if (visited[x]) continue;
            visited[x] = true;
            if (exit_mate[x] < 0 || augment(static_cast<std::size_t>(exit_mate[x]))) {
                exit_mate[x] = static_cast<long>(e);
                entry_mate[e] = static_cast<long>(x);
                return true;
            }
        }
        return false;
    };
    // Greedy first-fit, then augmenting paths for whoever is left.
    for (std::size_t e = 0; e < entries; ++e) {
        for (auto x : admissible[e]) {
            if (exit_mate[x] < 0) {
                exit_mate[x] = static_cast<long>(e);
                entry_mate[e] = static_cast<long>(x);
                break;
            }
        }
    }
    for (std::size_t e = 0; e < entries; ++e) {
        if (entry_mate[e] >= 0) continue;
        visited.assign(exits, false);
        augment(e);
    }

    std::set<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t e = 0; e < entries; ++e) {
        if (entry_mate[e] >= 0)
            chosen.emplace(e, static_cast<std::size_t>(entry_mate[e]));
        else
            chosen.emplace(e, admissible[e].front());
    }
    for (std::size_t x = 0; x < exits; ++x) {
        if (exit_mate[x] >= 0) continue;
        for (std::size_t e = 0; e < entries; ++e) {
            if (std::binary_search(admissible[e].begin(), admissible[e].end(), x)) {
                chosen.emplace(e, x);
                break;
            }
        }
    }
    return {{chosen.begin(), chosen.end()}};
}

}  // namespace detail

/// Expands the zones of a report into test requirements for a criterion.
///
/// All combinations yields every feasible (entry, exit) pair. Each border
/// node once yields a minimum number of feasible pairs that together touch
/// every entry and exit; a border node without any feasible pair raises
/// INFEASIBLE_BORDER_NODE. Zones without exits contribute one entry-only
/// requirement per entry under both criteria.
inline std::vector<TestRequirement> build_requirements(const ProcessGraph& graph, const LczReport& report,
                                                       CoverageCriterion criterion) {
    std::vector<TestRequirement> out;
    auto push = [&](int zone_id, const std::string& entry, const std::string& exit,
                    std::vector<std::string> segment) {
        out.push_back({"R" + std::to_string(out.size() + 1), zone_id, entry, exit, std::move(segment)});
    };

    for (const auto& zone : report.zones) {
        if (zone.exits.empty()) {
            for (const auto& entry : zone.entries) push(zone.zone_id, entry, "", {entry});
            continue;
        }
        const auto segments = zone_segments(graph, zone);
        if (criterion == CoverageCriterion::all_combinations_of_border_nodes) {
            for (const auto& [key, segment] : segments)
                if (segment) push(zone.zone_id, key.first, key.second, *segment);
            continue;
        }

        std::vector<std::vector<std::size_t>> admissible(zone.entries.size());
        std::vector<bool> exit_used(zone.exits.size(), false);
        for (std::size_t e = 0; e < zone.entries.size(); ++e) {
            for (std::size_t x = 0; x < zone.exits.size(); ++x) {
                if (segments.at({zone.entries[e], zone.exits[x]})) {
                    admissible[e].push_back(x);
                    exit_used[x] = true;
                }
            }
            if (admissible[e].empty())
                throw Error(codes::kInfeasibleBorderNode,
                            "entry node of zone " + std::to_string(zone.zone_id) + " reaches none of its exits",
                            zone.entries[e]);
        }
        for (std::size_t x = 0; x < zone.exits.size(); ++x)
            if (!exit_used[x])
                throw Error(codes::kInfeasibleBorderNode,
                            "exit node of zone " + std::to_string(zone.zone_id) + " is reached from no entry",
                            zone.exits[x]);

        const auto cover = detail::minimum_pair_cover(zone.entries.size(), zone.exits.size(), admissible);
        for (const auto& [e, x] : cover.pairs) {
            const auto& entry = zone.entries[e];
            const auto& exit = zone.exits[x];
            push(zone.zone_id, entry, exit, *segments.at({entry, exit}));
        }
    }
    return out;
}

enum class BorderRole { entry, exit };

struct BorderNodeRef {
    int zone_id = 0;
    std::string node;
    BorderRole role = BorderRole::entry;

    bool operator==(const BorderNodeRef&) const = default;
};

struct CoverageVerdict {
    bool satisfied = true;
    /// Feasible pairs not toured. Under each-border-node-once only the pairs
    /// touching an uncovered border node are listed.
    std::vector<CoveredPair> uncovered_pairs;
    /// Border nodes without a toured pair (each-border-node-once only).
    std::vector<BorderNodeRef> uncovered_nodes;
};

/// Pairs toured by one walk: an entry of a zone followed by the first node
/// outside that zone, with everything in between inside the zone.
inline std::set<CoveredPair> scan_covered_pairs(const LczReport& report, std::span<const std::string> walk) {
    std::set<CoveredPair> covered;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        for (const auto& zone : report.zones) {
            if (!zone.has_entry(walk[i])) continue;
            if (zone.exits.empty()) {
                covered.insert({zone.zone_id, walk[i], ""});
                continue;
            }
            std::size_t j = i + 1;
            while (j < walk.size() && zone.has_member(walk[j])) ++j;
            if (j < walk.size() && zone.has_exit(walk[j])) covered.insert({zone.zone_id, walk[i], walk[j]});
        }
    }
    return covered;
}

namespace detail {

/// Whether `exit` can be reached from `entry` through zone members only.
inline bool tour_feasible(const ProcessGraph& graph, const LimitedConnectivityZone& zone, const std::string& entry,
                          const std::string& exit) {
    const auto target = graph.index_of(exit);
    std::vector<bool> seen(graph.size(), false);
    std::vector<ProcessGraph::Index> stack{graph.index_of(entry)};
    seen[stack.back()] = true;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto s : graph.successors(v)) {
            if (s == target) return true;
            if (!seen[s] && zone.has_member(graph.id(s))) {
                seen[s] = true;
                stack.push_back(s);
            }
        }
    }
    return false;
}

}  // namespace detail

/// Checks a set of walks against a criterion. Shares no path logic with the
/// generators: feasibility and touring are recomputed from the report.
inline CoverageVerdict verify_suite(const ProcessGraph& graph, const LczReport& report, CoverageCriterion criterion,
                                    std::span<const std::vector<std::string>> walks) {
    std::set<CoveredPair> covered;
    for (const auto& walk : walks) {
        const auto pairs = scan_covered_pairs(report, walk);
        covered.insert(pairs.begin(), pairs.end());
    }

    CoverageVerdict verdict;
    for (const auto& zone : report.zones) {
        std::vector<CoveredPair> feasible;
        if (zone.exits.empty()) {
            for (const auto& e : zone.entries) feasible.push_back({zone.zone_id, e, ""});
        } else {
            for (const auto& e : zone.entries)
                for (const auto& x : zone.exits)
                    if (detail::tour_feasible(graph, zone, e, x)) feasible.push_back({zone.zone_id, e, x});
        }

        if (criterion == CoverageCriterion::all_combinations_of_border_nodes) {
            for (const auto& p : feasible)
                if (!covered.count(p)) verdict.uncovered_pairs.push_back(p);
            continue;
        }

        std::set<std::string> touched;
        for (const auto& p : covered) {
            if (p.zone_id != zone.zone_id) continue;
            touched.insert(p.entry);
            if (!p.exit.empty()) touched.insert(p.exit);
        }
        for (const auto& e : zone.entries)
            if (!touched.count(e)) verdict.uncovered_nodes.push_back({zone.zone_id, e, BorderRole::entry});
        for (const auto& x : zone.exits)
            if (!touched.count(x)) verdict.uncovered_nodes.push_back({zone.zone_id, x, BorderRole::exit});
        for (const auto& p : feasible) {
            if (covered.count(p)) continue;
            if (!touched.count(p.entry) || (!p.exit.empty() && !touched.count(p.exit)))
                verdict.uncovered_pairs.push_back(p);
        }
    }
    verdict.satisfied = criterion == CoverageCriterion::all_combinations_of_border_nodes
                            ? verdict.uncovered_pairs.empty()
                            : verdict.uncovered_nodes.empty();
    return verdict;
}

}  // namespace lczmbt
