#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "lczmbt/detail/context.hpp"
#include "lczmbt/matching.hpp"

namespace lczmbt {

/// Arc of the prefix graph: requirement `to` can follow requirement `from`
/// in one test case through a connector of `connector` steps.
struct PrefixArc {
    std::size_t from = 0;
    std::size_t to = 0;
    int connector = 0;
    /// Steps saved against running both requirements as separate cases.
    long saving = 0;
};

/// Chains of requirement indices forming a path cover of the prefix graph.
/// Chains are joined through a maximum-weight bipartite matching between
/// requirement tails and heads, where an arc's weight is the number of steps
/// it saves; arcs that save nothing are never used.
inline std::vector<std::vector<std::size_t>> prefix_graph_path_cover(const detail::GenerationContext& ctx) {
    const auto& reqs = ctx.requirements();
    const auto& paths = ctx.paths();
    const std::size_t m = reqs.size();

    std::vector<std::vector<long>> weight(m, std::vector<long>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const int connector = paths.distance(reqs[a].last, reqs[b].entry);
            if (connector == kUnreachable) continue;
            const long saving = ctx.suffix_cost(reqs[a]) + ctx.prefix_cost(reqs[b]) - connector;
            if (saving > 0) weight[a][b] = saving;
        }
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> next(m, kNone), prev(m, kNone);
    const auto assignment = max_weight_assignment(weight);
    for (std::size_t a = 0; a < m; ++a) {
        const auto b = assignment[a];
        if (weight[a][b] > 0) {
            next[a] = b;
            prev[b] = a;
        }
    }

    // A matching may close cycles; cut each one at its cheapest arc.
    std::vector<int> state(m, 0);  // 0 unseen, 1 on a chain
    for (std::size_t a = 0; a < m; ++a) {
        if (prev[a] == kNone) {
            for (auto v = a; v != kNone; v = next[v]) state[v] = 1;
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (state[a] != 0) continue;
        std::size_t cut = a;
        for (auto v = next[a]; v != a; v = next[v])
            if (weight[v][next[v]] < weight[cut][next[cut]] ||
                (weight[v][next[v]] == weight[cut][next[cut]] && v < cut))
                cut = v;
        const auto head = next[cut];
        next[cut] = kNone;
        prev[head] = kNone;
        for (auto v = head; v != kNone; v = next[v]) state[v] = 1;
    }

    std::vector<std::vector<std::size_t>> chains;
    for (std::size_t a = 0; a < m; ++a) {
        if (prev[a] != kNone) continue;
        auto& chain = chains.emplace_back();
        for (auto v = a; v != kNone; v = next[v]) chain.push_back(v);
    }
    return chains;
}

/// Enforced prime paths: the requirement segments are composed along a
/// minimum path cover of the prefix graph; every chain becomes one test case
/// (start prefix, segments with connectors, end suffix), split at segment
/// boundaries where it would exceed the walk cap.
inline TestSuite generate_epp(const ProcessGraph& graph, const LczReport& report,
                              std::span<const TestRequirement> requirements, const GenerationConfig& config) {
    using detail::Index;
    const detail::GenerationContext ctx(graph, report, requirements, config);
    const auto& reqs = ctx.requirements();
    const auto& paths = ctx.paths();

    std::vector<std::vector<Index>> cases;
    for (const auto& chain : prefix_graph_path_cover(ctx)) {
        std::vector<Index> walk{graph.start()};
        for (auto r : chain) {
            const int used = static_cast<int>(walk.size()) - 1;
            const int need = paths.distance(walk.back(), reqs[r].entry) + reqs[r].length() + ctx.suffix_cost(reqs[r]);
            if (walk.size() > 1 && used + need > ctx.cap()) {
                ctx.close(walk);
                cases.push_back(std::move(walk));
                walk = {graph.start()};
            }
            ctx.append_segment(walk, reqs[r]);
        }
        ctx.close(walk);
        cases.push_back(std::move(walk));
    }
    return ctx.make_suite(cases, report, Algorithm::epp);
}

}  // namespace lczmbt
