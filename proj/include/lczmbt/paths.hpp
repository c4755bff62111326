#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <vector>

#include "lczmbt/model.hpp"

namespace lczmbt {

inline constexpr int kUnreachable = -1;

/// Edge-count distances from every node to a target set, moving backwards
/// from the targets. `may_pass(v)` decides whether a non-target node may lie
/// on a path (the targets themselves are always allowed).
inline std::vector<int> distances_to(const ProcessGraph& graph, const std::vector<bool>& targets,
                                     const std::function<bool(ProcessGraph::Index)>& may_pass = {}) {
    std::vector<int> dist(graph.size(), kUnreachable);
    std::deque<ProcessGraph::Index> queue;
    for (ProcessGraph::Index v = 0; v < graph.size(); ++v) {
        if (targets[v]) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto p : graph.predecessors(v)) {
            if (dist[p] != kUnreachable) continue;
            if (may_pass && !may_pass(p)) continue;
            dist[p] = dist[v] + 1;
            queue.push_back(p);
        }
    }
    return dist;
}

/// Follows a distance field from `from` down to a target, taking the
/// smallest-id successor at every step. Among all shortest paths this yields
/// the lexicographically smallest id sequence. Empty if `from` is unreachable.
inline std::vector<ProcessGraph::Index> descend(const ProcessGraph& graph, ProcessGraph::Index from,
                                                const std::vector<int>& dist) {
    if (dist[from] == kUnreachable) return {};
    std::vector<ProcessGraph::Index> path{from};
    auto cur = from;
    while (dist[cur] > 0) {
        for (auto s : graph.successors(cur)) {
            if (dist[s] == dist[cur] - 1) {
                cur = s;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

/// All-pairs BFS table over the full model plus distances to the nearest end.
class ShortestPaths {
public:
    explicit ShortestPaths(const ProcessGraph& graph) : graph_(&graph) {
        const auto n = graph.size();
        to_.reserve(n);
        for (ProcessGraph::Index v = 0; v < n; ++v) {
            std::vector<bool> target(n, false);
            target[v] = true;
            to_.push_back(distances_to(graph, target));
        }
        std::vector<bool> ends(n, false);
        for (ProcessGraph::Index v = 0; v < n; ++v) ends[v] = graph.is_end(v);
        to_end_ = distances_to(graph, ends);
    }

    const ProcessGraph& graph() const { return *graph_; }

    int distance(ProcessGraph::Index from, ProcessGraph::Index to) const { return to_[to][from]; }
    bool reachable(ProcessGraph::Index from, ProcessGraph::Index to) const {
        return to_[to][from] != kUnreachable;
    }
    std::vector<ProcessGraph::Index> path(ProcessGraph::Index from, ProcessGraph::Index to) const {
        return descend(*graph_, from, to_[to]);
    }

    int distance_to_end(ProcessGraph::Index from) const { return to_end_[from]; }
    std::vector<ProcessGraph::Index> path_to_end(ProcessGraph::Index from) const {
        return descend(*graph_, from, to_end_);
    }
    const std::vector<int>& end_distances() const { return to_end_; }

private:
    const ProcessGraph* graph_;
    std::vector<std::vector<int>> to_;  // to_[target][source]
    std::vector<int> to_end_;
};

}  // namespace lczmbt
