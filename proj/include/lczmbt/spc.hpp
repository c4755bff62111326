#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "lczmbt/detail/context.hpp"

namespace lczmbt {

/// Shortest path composition: requirement segments are the zone-interior
/// shortest paths; test cases chain them greedily in entry-id order, joined
/// by shortest connectors, and close at the nearest end node.
inline TestSuite generate_spc(const ProcessGraph& graph, const LczReport& report,
                              std::span<const TestRequirement> requirements, const GenerationConfig& config) {
    using detail::Index;
    const detail::GenerationContext ctx(graph, report, requirements, config);
    const auto& reqs = ctx.requirements();
    const auto& paths = ctx.paths();

    std::vector<std::size_t> order(reqs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return reqs[a].segment < reqs[b].segment; });

    std::vector<bool> covered(reqs.size(), false);
    std::size_t remaining = reqs.size();
    auto mark = [&](const std::vector<Index>& walk) {
        for (auto r : ctx.toured(walk)) {
            if (!covered[r]) {
                covered[r] = true;
                --remaining;
            }
        }
    };

    std::vector<std::vector<Index>> cases;
    std::vector<Index> walk{graph.start()};
    while (remaining > 0) {
        const int used = static_cast<int>(walk.size()) - 1;
        const detail::GenerationContext::Requirement* next = nullptr;
        for (auto r : order) {
            if (covered[r]) continue;
            const int connector = paths.distance(walk.back(), reqs[r].entry);
            if (connector == kUnreachable) continue;
            if (used + connector + reqs[r].length() + ctx.suffix_cost(reqs[r]) <= ctx.cap()) {
                next = &reqs[r];
                break;
            }
        }
        if (next) {
            ctx.append_segment(walk, *next);
            mark(walk);
            continue;
        }
        if (walk.size() == 1)
            throw Error(codes::kWalkCapExceeded, "no remaining requirement fits into a single test case");
        ctx.close(walk);
        mark(walk);
        cases.push_back(std::move(walk));
        walk = {graph.start()};
    }
    // A start node inside a zone is toured before any step is taken.
    if (walk.size() > 1 || !ctx.toured(walk).empty()) {
        ctx.close(walk);
        cases.push_back(std::move(walk));
    }
    return ctx.make_suite(cases, report, Algorithm::spc);
}

}  // namespace lczmbt
