#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "lczmbt/error.hpp"

namespace lczmbt {

enum class NodeKind { action, decision };

inline const char* to_string(NodeKind kind) {
    return kind == NodeKind::decision ? "decision" : "action";
}

/// One action, function or decision point of the modelled process.
struct ProcessNode {
    std::string id;
    std::string name;
    /// Kind as written in the source document, if any. The effective kind is
    /// always derived from the out-degree (see ProcessGraph::kind).
    std::optional<NodeKind> kind;
    /// Probability that the device hosting this node loses connectivity.
    double outage_probability = 0.0;

    bool operator==(const ProcessNode&) const = default;
};

struct Transition {
    std::string from;
    std::string to;
    std::string label;

    bool operator==(const Transition&) const = default;
    auto operator<=>(const Transition&) const = default;
};

/// Raw process model as read from a document. It may violate any of the
/// structural rules; `validate` reports them, `ProcessGraph` requires them.
struct ProcessModel {
    std::vector<ProcessNode> nodes;
    std::vector<Transition> transitions;
    std::string start;
    std::vector<std::string> ends;

    bool operator==(const ProcessModel&) const = default;
};

enum class Severity { error, warning };

struct Issue {
    Severity severity = Severity::error;
    std::string code;
    std::string locus;  // node id or "from->to[label]"
    std::string message;

    bool operator==(const Issue&) const = default;
};

struct ValidationReport {
    std::vector<Issue> issues;

    bool ok() const {
        return std::none_of(issues.begin(), issues.end(),
                            [](const Issue& i) { return i.severity == Severity::error; });
    }
    std::size_t error_count() const {
        return static_cast<std::size_t>(std::count_if(
            issues.begin(), issues.end(), [](const Issue& i) { return i.severity == Severity::error; }));
    }
    bool has(const std::string& code, const std::string& locus = {}) const {
        return std::any_of(issues.begin(), issues.end(), [&](const Issue& i) {
            return i.code == code && (locus.empty() || i.locus == locus);
        });
    }

    bool operator==(const ValidationReport&) const = default;
};

inline std::string edge_locus(const Transition& t) {
    std::string s = t.from + "->" + t.to;
    if (!t.label.empty()) s += "[" + t.label + "]";
    return s;
}

namespace detail {

inline std::vector<bool> bfs_mark(std::size_t start, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(adj.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace detail

/// Checks every structural rule of a process model. Problems are returned as
/// data; nothing throws.
inline ValidationReport validate(const ProcessModel& model) {
    ValidationReport report;
    auto error = [&](std::string code, std::string locus, std::string message) {
        report.issues.push_back({Severity::error, std::move(code), std::move(locus), std::move(message)});
    };
    auto warning = [&](std::string code, std::string locus, std::string message) {
        report.issues.push_back({Severity::warning, std::move(code), std::move(locus), std::move(message)});
    };

    if (model.nodes.empty()) {
        error("EMPTY_MODEL", "", "model has no nodes");
        return report;
    }

    std::map<std::string, std::size_t> index;
    for (const auto& node : model.nodes) {
        if (node.id.empty()) {
            error("INVALID_NODE_ID", "", "node with empty id");
            continue;
        }
        if (!index.emplace(node.id, 0).second) error("DUPLICATE_NODE", node.id, "node id appears more than once");
        if (!(node.outage_probability >= 0.0 && node.outage_probability <= 1.0))
            error("PROBABILITY_RANGE", node.id, "outage probability must lie in [0, 1]");
    }
    // Indices follow lexicographic id order.
    {
        std::size_t i = 0;
        for (auto& [id, idx] : index) idx = i++;
    }

    if (model.nodes.size() == 1) {
        error("DEGENERATE_MODEL", model.nodes.front().id, "a single-node model has nothing to test");
        return report;
    }

    const bool start_known = index.count(model.start) != 0;
    if (!start_known) error("UNKNOWN_START", model.start, "start node is not a node of the model");
    if (model.ends.empty()) error("NO_END_NODES", "", "model declares no end node");
    std::set<std::string> seen_ends;
    for (const auto& end : model.ends) {
        if (!index.count(end)) error("UNKNOWN_END", end, "end node is not a node of the model");
        if (!seen_ends.insert(end).second) warning("DUPLICATE_END", end, "end node listed more than once");
        if (end == model.start) error("START_IS_END", end, "start and end nodes must be disjoint");
    }

    const std::size_t n = index.size();
    std::vector<std::vector<std::size_t>> succ(n), pred(n);
    std::vector<std::size_t> out_degree(n, 0);
    std::set<Transition> seen_edges;
    for (const auto& t : model.transitions) {
        const auto from = index.find(t.from);
        const auto to = index.find(t.to);
        if (from == index.end() || to == index.end()) {
            error("UNKNOWN_NODE", edge_locus(t), "transition references a node that does not exist");
            continue;
        }
        if (!seen_edges.insert(t).second) {
            error("DUPLICATE_TRANSITION", edge_locus(t), "identical transition declared twice");
            continue;
        }
        succ[from->second].push_back(to->second);
        pred[to->second].push_back(from->second);
        ++out_degree[from->second];
    }

    if (start_known) {
        const auto reached = detail::bfs_mark(index.at(model.start), succ);
        for (const auto& [id, i] : index)
            if (!reached[i]) error("UNREACHABLE_NODE", id, "node cannot be reached from the start node");
    }

    std::vector<bool> reaches_end(n, false);
    {
        std::deque<std::size_t> queue;
        for (const auto& end : model.ends) {
            const auto it = index.find(end);
            if (it != index.end() && !reaches_end[it->second]) {
                reaches_end[it->second] = true;
                queue.push_back(it->second);
            }
        }
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (auto p : pred[v]) {
                if (!reaches_end[p]) {
                    reaches_end[p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    if (!model.ends.empty()) {
        for (const auto& [id, i] : index)
            if (!reaches_end[i]) error("DEAD_END", id, "no end node is reachable from this node");
    }

    std::map<std::string, const ProcessNode*> by_id;
    for (const auto& node : model.nodes) by_id.emplace(node.id, &node);
    for (const auto& [id, i] : index) {
        const auto* node = by_id.at(id);
        if (!node->kind) continue;
        const auto derived = out_degree[i] > 1 ? NodeKind::decision : NodeKind::action;
        if (*node->kind != derived)
            warning("KIND_MISMATCH", id,
                    std::string("declared ") + to_string(*node->kind) + " but out-degree makes it " +
                        to_string(derived));
    }
    return report;
}

/// Index-based view over a validated model. Node indices follow
/// lexicographic id order, so comparing indices compares ids.
class ProcessGraph {
public:
    using Index = std::size_t;

    explicit ProcessGraph(ProcessModel model) : model_(std::move(model)) {
        const auto report = validate(model_);
        if (!report.ok()) {
            const auto& first = *std::find_if(report.issues.begin(), report.issues.end(),
                                              [](const Issue& i) { return i.severity == Severity::error; });
            throw Error(codes::kInvalidModel, first.code + " " + first.message, first.locus);
        }
        std::vector<const ProcessNode*> sorted;
        for (const auto& node : model_.nodes) sorted.push_back(&node);
        std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });
        for (Index i = 0; i < sorted.size(); ++i) {
            nodes_.push_back(*sorted[i]);
            index_.emplace(sorted[i]->id, i);
        }
        const auto n = nodes_.size();
        succ_.resize(n);
        pred_.resize(n);
        out_degree_.assign(n, 0);
        for (const auto& t : model_.transitions) {
            const auto from = index_.at(t.from);
            const auto to = index_.at(t.to);
            succ_[from].push_back(to);
            pred_[to].push_back(from);
            ++out_degree_[from];
        }
        for (auto* list : {&succ_, &pred_}) {
            for (auto& adj : *list) {
                std::sort(adj.begin(), adj.end());
                adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
            }
        }
        start_ = index_.at(model_.start);
        is_end_.assign(n, false);
        for (const auto& end : model_.ends) is_end_[index_.at(end)] = true;
    }

    const ProcessModel& model() const { return model_; }
    std::size_t size() const { return nodes_.size(); }

    std::optional<Index> find(const std::string& id) const {
        const auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    Index index_of(const std::string& id) const {
        const auto it = index_.find(id);
        if (it == index_.end()) throw Error("UNKNOWN_NODE", "no node with id '" + id + "'", id);
        return it->second;
    }

    const std::string& id(Index i) const { return nodes_[i].id; }
    const std::string& name(Index i) const { return nodes_[i].name; }
    double outage_probability(Index i) const { return nodes_[i].outage_probability; }
    const ProcessNode& node(Index i) const { return nodes_[i]; }

    /// Distinct successors/predecessors, sorted by index.
    std::span<const Index> successors(Index i) const { return succ_[i]; }
    std::span<const Index> predecessors(Index i) const { return pred_[i]; }
    /// Number of outgoing transitions, counting labelled parallel edges.
    std::size_t out_degree(Index i) const { return out_degree_[i]; }
    NodeKind kind(Index i) const { return out_degree_[i] > 1 ? NodeKind::decision : NodeKind::action; }

    bool has_edge(Index from, Index to) const {
        return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
    }

    Index start() const { return start_; }
    bool is_end(Index i) const { return is_end_[i]; }

    std::vector<std::string> ids(std::span<const Index> walk) const {
        std::vector<std::string> out;
        out.reserve(walk.size());
        for (auto i : walk) out.push_back(id(i));
        return out;
    }

private:
    ProcessModel model_;
    std::vector<ProcessNode> nodes_;
    std::map<std::string, Index> index_;
    std::vector<std::vector<Index>> succ_, pred_;
    std::vector<std::size_t> out_degree_;
    std::vector<bool> is_end_;
    Index start_ = 0;
};

/// True iff `walk` starts at the start node, ends at an end node and follows
/// transitions of the model. Node revisits are allowed.
inline bool walk_is_valid(const ProcessGraph& graph, std::span<const std::string> walk) {
    if (walk.empty()) return false;
    std::vector<ProcessGraph::Index> idx;
    idx.reserve(walk.size());
    for (const auto& id : walk) {
        const auto i = graph.find(id);
        if (!i) return false;
        idx.push_back(*i);
    }
    if (idx.front() != graph.start() || !graph.is_end(idx.back())) return false;
    for (std::size_t k = 1; k < idx.size(); ++k)
        if (!graph.has_edge(idx[k - 1], idx[k])) return false;
    return true;
}

inline bool walk_is_valid(const ProcessModel& model, std::span<const std::string> walk) {
    return walk_is_valid(ProcessGraph(model), walk);
}

}  // namespace lczmbt
