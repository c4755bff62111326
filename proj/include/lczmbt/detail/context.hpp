#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lczmbt/coverage.hpp"
#include "lczmbt/error.hpp"
#include "lczmbt/lcz.hpp"
#include "lczmbt/model.hpp"
#include "lczmbt/paths.hpp"
#include "lczmbt/suite.hpp"

namespace lczmbt::detail {

using Index = ProcessGraph::Index;

/// Shared state of one generator run: distances, requirement segments in
/// index form and the zone lookup used to find which requirements a walk
/// tours.
class GenerationContext {
public:
    struct Requirement {
        Index entry;
        Index last;  // exit, or the entry itself for entry-only requirements
        std::vector<Index> segment;
        int zone = 0;
        bool has_exit() const { return last != entry; }
        int length() const { return static_cast<int>(segment.size()) - 1; }
    };

    GenerationContext(const ProcessGraph& graph, const LczReport& report,
                      std::span<const TestRequirement> requirements, const GenerationConfig& config)
        : graph_(&graph), paths_(graph), config_(config) {
        check_config(config);
        cap_ = config.walk_cap > 0 ? config.walk_cap : 4 * static_cast<int>(graph.size());
        config_.walk_cap = cap_;

        zone_of_.assign(graph.size(), 0);
        for (const auto& zone : report.zones) {
            for (const auto& id : zone.members) zone_of_[graph.index_of(id)] = zone.zone_id;
            if (zone.exits.empty()) entry_only_.insert(zone.zone_id);
        }

        for (std::size_t r = 0; r < requirements.size(); ++r) {
            const auto& req = requirements[r];
            if (req.segment.empty() || req.segment.front() != req.entry ||
                req.segment.back() != (req.exit.empty() ? req.entry : req.exit))
                throw Error("INVALID_REQUIREMENT", "segment does not run from entry to exit", req.req_id);
            Requirement out{graph.index_of(req.entry), 0, {}, req.zone_id};
            for (const auto& id : req.segment) out.segment.push_back(graph.index_of(id));
            for (std::size_t k = 1; k < out.segment.size(); ++k)
                if (!graph.has_edge(out.segment[k - 1], out.segment[k]))
                    throw Error("INVALID_REQUIREMENT", "segment uses a missing transition", req.req_id);
            out.last = out.segment.back();
            by_pair_[key(req.zone_id, out.entry, req.exit.empty() ? -1 : static_cast<long>(out.last))] = r;
            if (attach_cost(out) > cap_)
                throw Error(codes::kWalkCapExceeded,
                            "requirement needs " + std::to_string(attach_cost(out)) + " steps but walk_cap is " +
                                std::to_string(cap_),
                            req.req_id);
            requirements_.push_back(std::move(out));
        }
    }

    const ProcessGraph& graph() const { return *graph_; }
    const ShortestPaths& paths() const { return paths_; }
    const GenerationConfig& config() const { return config_; }
    int cap() const { return cap_; }
    int zone_of(Index v) const { return zone_of_[v]; }
    const std::vector<Requirement>& requirements() const { return requirements_; }

    int prefix_cost(const Requirement& r) const { return paths_.distance(graph_->start(), r.entry); }
    int suffix_cost(const Requirement& r) const { return paths_.distance_to_end(r.last); }
    /// Steps of a test case that tours only this requirement.
    int attach_cost(const Requirement& r) const { return prefix_cost(r) + r.length() + suffix_cost(r); }

    /// Indices of the requirements a walk tours.
    std::vector<std::size_t> toured(std::span<const Index> walk) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const int zone = zone_of_[walk[i]];
            if (zone == 0) continue;
            long exit = -1;
            if (!entry_only_.count(zone)) {
                std::size_t j = i + 1;
                while (j < walk.size() && zone_of_[walk[j]] == zone) ++j;
                if (j == walk.size()) continue;
                exit = static_cast<long>(walk[j]);
            }
            const auto it = by_pair_.find(key(zone, walk[i], exit));
            if (it != by_pair_.end()) out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Every entry-to-exit tour of the walk, requirement or not.
    std::vector<CoveredPair> covered_pairs(std::span<const Index> walk, const LczReport& report) const {
        std::set<CoveredPair> pairs;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const int zone = zone_of_[walk[i]];
            if (zone == 0) continue;
            const auto* z = report.zone(zone);
            if (!z->has_entry(graph_->id(walk[i]))) continue;
            if (entry_only_.count(zone)) {
                pairs.insert({zone, graph_->id(walk[i]), ""});
                continue;
            }
            std::size_t j = i + 1;
            while (j < walk.size() && zone_of_[walk[j]] == zone) ++j;
            if (j < walk.size()) pairs.insert({zone, graph_->id(walk[i]), graph_->id(walk[j])});
        }
        return {pairs.begin(), pairs.end()};
    }

    /// Appends the shortest connector from the walk's last node to `to`.
    void extend_to(std::vector<Index>& walk, Index to) const {
        const auto path = paths_.path(walk.back(), to);
        if (path.size() > 1) walk.insert(walk.end(), path.begin() + 1, path.end());
    }
    void append_segment(std::vector<Index>& walk, const Requirement& r) const {
        extend_to(walk, r.entry);
        walk.insert(walk.end(), r.segment.begin() + 1, r.segment.end());
    }
    void close(std::vector<Index>& walk) const {
        const auto path = paths_.path_to_end(walk.back());
        if (path.size() > 1) walk.insert(walk.end(), path.begin() + 1, path.end());
    }

    TestSuite make_suite(const std::vector<std::vector<Index>>& walks, const LczReport& report,
                         Algorithm generator) const {
        TestSuite suite;
        suite.generator = generator;
        suite.config_echo = config_;
        for (const auto& walk : walks) {
            TestCase tc;
            tc.case_id = "TC" + std::to_string(suite.cases.size() + 1);
            tc.steps = graph_->ids(walk);
            tc.covered_pairs = covered_pairs(walk, report);
            suite.cases.push_back(std::move(tc));
        }
        suite.total_steps = total_steps(suite.cases);
        return suite;
    }

private:
    static std::tuple<int, Index, long> key(int zone, Index entry, long exit) { return {zone, entry, exit}; }

    const ProcessGraph* graph_;
    ShortestPaths paths_;
    GenerationConfig config_;
    int cap_ = 0;
    std::vector<int> zone_of_;
    std::set<int> entry_only_;
    std::map<std::tuple<int, Index, long>, std::size_t> by_pair_;
    std::vector<Requirement> requirements_;
};

}  // namespace lczmbt::detail
