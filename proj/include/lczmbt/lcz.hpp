#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lczmbt/error.hpp"
#include "lczmbt/model.hpp"
#include "lczmbt/paths.hpp"

namespace lczmbt {

/// Network outage probability threshold in [0, 1].
class Threshold {
public:
    explicit Threshold(double value = 0.5) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw Error(codes::kInvalidThreshold, "threshold must lie in [0, 1]");
    }
    double value() const { return value_; }
    bool exceeded_by(double probability) const { return probability > value_; }

    bool operator==(const Threshold&) const = default;

private:
    double value_;
};

struct LimitedConnectivityZone {
    int zone_id = 0;
    std::vector<std::string> members;  // sorted
    std::vector<std::string> entries;  // sorted, subset of members
    std::vector<std::string> exits;    // sorted, disjoint from members

    bool has_member(const std::string& id) const {
        return std::binary_search(members.begin(), members.end(), id);
    }
    bool has_entry(const std::string& id) const {
        return std::binary_search(entries.begin(), entries.end(), id);
    }
    bool has_exit(const std::string& id) const { return std::binary_search(exits.begin(), exits.end(), id); }

    bool operator==(const LimitedConnectivityZone&) const = default;
};

struct LczWarning {
    std::string code;
    int zone_id = 0;  // 0 when not tied to a zone
    std::string node;
    std::string message;

    bool operator==(const LczWarning&) const = default;
};

struct LczReport {
    Threshold threshold;
    std::vector<LimitedConnectivityZone> zones;
    std::vector<LczWarning> warnings;

    const LimitedConnectivityZone* zone(int zone_id) const {
        for (const auto& z : zones)
            if (z.zone_id == zone_id) return &z;
        return nullptr;
    }
    bool has_warning(const std::string& code) const {
        return std::any_of(warnings.begin(), warnings.end(), [&](const auto& w) { return w.code == code; });
    }

    bool operator==(const LczReport&) const = default;
};

/// Splits the nodes whose outage probability strictly exceeds the threshold
/// into weakly connected zones and derives their entry and exit nodes.
inline LczReport compute_lczs(const ProcessGraph& graph, Threshold threshold) {
    using Index = ProcessGraph::Index;
    const auto n = graph.size();
    LczReport report{threshold, {}, {}};

    std::vector<bool> offline(n, false);
    for (Index v = 0; v < n; ++v) offline[v] = threshold.exceeded_by(graph.outage_probability(v));

    // Components are discovered in index order, so each one's smallest member
    // is found first and the resulting zone order is by smallest member id.
    std::vector<int> component(n, 0);
    int count = 0;
    for (Index seed = 0; seed < n; ++seed) {
        if (!offline[seed] || component[seed] != 0) continue;
        ++count;
        std::vector<Index> stack{seed};
        component[seed] = count;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            auto visit = [&](Index w) {
                if (offline[w] && component[w] == 0) {
                    component[w] = count;
                    stack.push_back(w);
                }
            };
            for (auto w : graph.successors(v)) visit(w);
            for (auto w : graph.predecessors(v)) visit(w);
        }
    }

    for (int z = 1; z <= count; ++z) {
        LimitedConnectivityZone zone;
        zone.zone_id = z;
        std::vector<bool> is_exit(n, false);
        for (Index v = 0; v < n; ++v) {
            if (component[v] != z) continue;
            zone.members.push_back(graph.id(v));
            const bool entered_from_outside =
                std::any_of(graph.predecessors(v).begin(), graph.predecessors(v).end(),
                            [&](Index p) { return component[p] != z; });
            if (v == graph.start() || entered_from_outside) zone.entries.push_back(graph.id(v));
            for (auto s : graph.successors(v))
                if (component[s] != z) is_exit[s] = true;
        }
        // Exits are online: an offline successor would belong to this zone.
        for (Index v = 0; v < n; ++v)
            if (is_exit[v]) zone.exits.push_back(graph.id(v));
        if (zone.exits.empty())
            report.warnings.push_back({"ZONE_WITHOUT_RESTORATION_PATH", z, "",
                                       "no flow leaves the zone; it is covered by entry only"});
        report.zones.push_back(std::move(zone));
    }
    if (report.zones.empty())
        report.warnings.push_back({"NO_ZONES", 0, "", "no node exceeds the outage probability threshold"});
    return report;
}

enum class SegmentMode { shortest_per_entry_exit };

using SegmentMap = std::map<std::pair<std::string, std::string>, std::optional<std::vector<std::string>>>;

/// For each (entry, exit) pair of the zone, the shortest walk from the entry
/// to the exit whose nodes other than the exit stay inside the zone. Ties go
/// to the lexicographically smallest id sequence. Infeasible pairs map to
/// nullopt.
inline SegmentMap zone_segments(const ProcessGraph& graph, const LimitedConnectivityZone& zone,
                                SegmentMode = SegmentMode::shortest_per_entry_exit) {
    SegmentMap out;
    std::vector<bool> member(graph.size(), false);
    for (const auto& id : zone.members) member[graph.index_of(id)] = true;
    for (const auto& exit : zone.exits) {
        std::vector<bool> target(graph.size(), false);
        target[graph.index_of(exit)] = true;
        const auto dist = distances_to(graph, target, [&](ProcessGraph::Index v) { return member[v]; });
        for (const auto& entry : zone.entries) {
            const auto path = descend(graph, graph.index_of(entry), dist);
            if (path.empty())
                out[{entry, exit}] = std::nullopt;
            else
                out[{entry, exit}] = graph.ids(path);
        }
    }
    return out;
}

}  // namespace lczmbt
