#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lczmbt/model.hpp"

namespace lczmbt::testing {

inline std::string corpus_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%02d", i);
    return buf;
}

/// Random process model with `n` nodes. Every node hangs off an earlier one
/// so all are reachable from v00; nodes without a forward edge become end
/// nodes. Cyclic models get
/// extra back edges. Outage probabilities come from the two tiers
/// {0.05, 0.8}, with children tending to inherit their parent's tier so
/// that weak-network regions form contiguous areas.
inline ProcessModel random_model(std::mt19937_64& rng, int n, bool cyclic) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto chance = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

    std::set<std::pair<int, int>> edges;
    std::vector<int> parent(n, -1);
    for (int i = 1; i < n; ++i) {
        parent[i] = uniform(std::max(0, i - 3), i - 1);
        edges.emplace(parent[i], i);
    }
    for (int k = 0; k < n / 3; ++k) {
        const int a = uniform(0, n - 2);
        const int b = uniform(a + 1, std::min(n - 1, a + 5));
        edges.emplace(a, b);
    }
    if (cyclic) {
        const int back = std::max(1, n / 6);
        for (int k = 0; k < back; ++k) {
            const int b = uniform(2, n - 1);
            const int a = uniform(std::max(1, b - 6), b - 1);
            edges.emplace(b, a);
        }
    }

    std::vector<bool> weak(n, false);
    for (int i = 0; i < n; ++i) {
        if (i > 0 && chance(0.6))
            weak[i] = weak[parent[i]];
        else
            weak[i] = chance(0.3);
    }

    // Nodes without a forward edge are ends.
    std::vector<int> forward_degree(n, 0);
    for (const auto& [a, b] : edges)
        if (a < b) ++forward_degree[a];

    ProcessModel m;
    for (int i = 0; i < n; ++i) {
        ProcessNode node;
        node.id = corpus_id(i);
        node.name = "Step " + std::to_string(i);
        node.outage_probability = weak[i] ? 0.8 : 0.05;
        m.nodes.push_back(std::move(node));
    }
    for (const auto& [a, b] : edges) m.transitions.push_back({corpus_id(a), corpus_id(b), ""});
    m.start = corpus_id(0);
    for (int i = 1; i < n; ++i)
        if (forward_degree[i] == 0 || chance(0.05)) m.ends.push_back(corpus_id(i));
    if (m.ends.empty()) m.ends.push_back(corpus_id(n - 1));
    return m;
}

struct CorpusEntry {
    int index;
    bool cyclic;
    ProcessModel model;
};

/// The seeded acceptance corpus: `count` models of 5-40 nodes, alternating
/// DAG and cyclic.
inline std::vector<CorpusEntry> corpus(int count = 500, std::uint64_t seed = 20210330, int min_nodes = 5,
                                       int max_nodes = 40) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    for (int i = 0; i < count; ++i) {
        const int n = std::uniform_int_distribution<int>(min_nodes, max_nodes)(rng);
        const bool cyclic = i % 2 == 1;
        out.push_back({i, cyclic, random_model(rng, n, cyclic)});
    }
    return out;
}

}  // namespace lczmbt::testing
