#pragma once

// Test-only reference implementations. They work on the raw ProcessModel
// with string ids and share no code with the library algorithms they check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lczmbt/coverage.hpp"
#include "lczmbt/model.hpp"

namespace lczmbt::testing::oracle {

using Adjacency = std::map<std::string, std::set<std::string>>;

inline Adjacency successors(const ProcessModel& m) {
    Adjacency adj;
    for (const auto& n : m.nodes) adj[n.id];
    for (const auto& t : m.transitions) adj[t.from].insert(t.to);
    return adj;
}

inline std::set<std::string> reachable_from(const ProcessModel& m, const std::string& from) {
    const auto adj = successors(m);
    std::set<std::string> seen{from};
    std::vector<std::string> todo{from};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (const auto& w : adj.at(v))
            if (seen.insert(w).second) todo.push_back(w);
    }
    return seen;
}

struct Zone {
    std::set<std::string> members, entries, exits;
};

/// Zones by union-find over the undirected edges among filtered nodes,
/// ordered by smallest member id.
inline std::vector<Zone> zones(const ProcessModel& m, double threshold) {
    std::map<std::string, std::string> parent;
    for (const auto& n : m.nodes)
        if (n.outage_probability > threshold) parent[n.id] = n.id;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& t : m.transitions)
        if (parent.count(t.from) && parent.count(t.to)) parent[find(t.from)] = find(t.to);
    std::map<std::string, Zone> by_root;
    for (const auto& [id, _] : parent) by_root[find(id)].members.insert(id);
    std::vector<Zone> out;
    for (auto& [_, z] : by_root) out.push_back(z);
    std::sort(out.begin(), out.end(), [](const Zone& a, const Zone& b) { return *a.members.begin() < *b.members.begin(); });
    for (auto& z : out) {
        if (z.members.count(m.start)) z.entries.insert(m.start);
        for (const auto& t : m.transitions) {
            const bool in_from = z.members.count(t.from) != 0, in_to = z.members.count(t.to) != 0;
            if (!in_from && in_to) z.entries.insert(t.to);
            if (in_from && !in_to) z.exits.insert(t.to);
        }
    }
    return out;
}

/// Pairs (zone index, entry, exit) toured continuously by a walk; exit ""
/// for exit-less zones.
inline std::set<std::tuple<int, std::string, std::string>> toured(const std::vector<Zone>& zs,
                                                                  const std::vector<std::string>& walk) {
    std::set<std::tuple<int, std::string, std::string>> out;
    for (std::size_t z = 0; z < zs.size(); ++z) {
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (!zs[z].entries.count(walk[i])) continue;
            if (zs[z].exits.empty()) {
                out.emplace(static_cast<int>(z), walk[i], "");
                continue;
            }
            std::size_t j = i + 1;
            while (j < walk.size() && zs[z].members.count(walk[j])) ++j;
            if (j < walk.size()) out.emplace(static_cast<int>(z), walk[i], walk[j]);
        }
    }
    return out;
}

/// Whether exit x is reachable from entry e through zone members only.
inline bool feasible(const ProcessModel& m, const Zone& z, const std::string& e, const std::string& x) {
    const auto adj = successors(m);
    std::set<std::string> seen{e};
    std::vector<std::string> todo{e};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (const auto& w : adj.at(v)) {
            if (w == x) return true;
            if (z.members.count(w) && seen.insert(w).second) todo.push_back(w);
        }
    }
    return false;
}

/// Every walk from start to an end with at most `max_steps` edges.
inline std::vector<std::vector<std::string>> walks(const ProcessModel& m, int max_steps) {
    const auto adj = successors(m);
    const std::set<std::string> ends(m.ends.begin(), m.ends.end());
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur{m.start};
    std::function<void()> dfs = [&] {
        if (ends.count(cur.back())) out.push_back(cur);
        if (static_cast<int>(cur.size()) - 1 == max_steps) return;
        for (const auto& w : adj.at(cur.back())) {
            cur.push_back(w);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    return out;
}

/// Fewest total steps of any set of walks (each of at most `max_steps`
/// edges) satisfying the criterion, by exhaustive enumeration plus a DP over
/// coverage masks. nullopt if no such set exists within the bound.
inline std::optional<int> optimal_total_steps(const ProcessModel& m, double threshold, CoverageCriterion criterion,
                                              int max_steps) {
    const auto zs = zones(m, threshold);
    // Targets: feasible pairs (all-pairs) or border nodes (ebno).
    std::vector<std::tuple<int, std::string, std::string>> pair_targets;
    std::vector<std::pair<int, std::string>> node_targets;
    for (std::size_t z = 0; z < zs.size(); ++z) {
        const int zi = static_cast<int>(z);
        if (zs[z].exits.empty()) {
            for (const auto& e : zs[z].entries) pair_targets.emplace_back(zi, e, "");
        } else {
            for (const auto& e : zs[z].entries)
                for (const auto& x : zs[z].exits)
                    if (feasible(m, zs[z], e, x)) pair_targets.emplace_back(zi, e, x);
        }
        for (const auto& e : zs[z].entries) node_targets.emplace_back(zi, e);
        for (const auto& x : zs[z].exits) node_targets.emplace_back(zi, x);
    }
    const bool by_pair = criterion == CoverageCriterion::all_combinations_of_border_nodes;
    const std::size_t t = by_pair ? pair_targets.size() : node_targets.size();
    if (t == 0) return 0;
    if (t > 16) return std::nullopt;

    std::map<unsigned, int> cheapest;
    for (const auto& w : walks(m, max_steps)) {
        const auto pairs = toured(zs, w);
        unsigned mask = 0;
        for (std::size_t k = 0; k < t; ++k) {
            bool hit = false;
            if (by_pair) {
                hit = pairs.count(pair_targets[k]) != 0;
            } else {
                const auto& [zi, id] = node_targets[k];
                for (const auto& [pz, pe, px] : pairs)
                    if (pz == zi && (pe == id || px == id)) hit = true;
            }
            if (hit) mask |= 1u << k;
        }
        if (mask == 0) continue;
        const int cost = static_cast<int>(w.size()) - 1;
        auto it = cheapest.find(mask);
        if (it == cheapest.end() || cost < it->second) cheapest[mask] = cost;
    }
    const unsigned full = (1u << t) - 1;
    constexpr int kInf = 1 << 29;
    std::vector<int> dp(full + 1, kInf);
    dp[0] = 0;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (dp[mask] == kInf) continue;
        for (const auto& [w, cost] : cheapest) dp[mask | w] = std::min(dp[mask | w], dp[mask] + cost);
    }
    if (dp[full] == kInf) return std::nullopt;
    return dp[full];
}

}  // namespace lczmbt::testing::oracle
