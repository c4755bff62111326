#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lczmbt/detail/context.hpp"

namespace lczmbt {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream per (seed, iteration, ant) so ants can run in any
/// order without changing the result.
inline std::mt19937_64 ant_stream(std::uint64_t seed, std::uint64_t iteration, std::uint64_t ant) {
    return std::mt19937_64(splitmix64(splitmix64(splitmix64(seed) ^ iteration) ^ ant));
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Evaporation never drives pheromone below this level, so nodes that were
// not on recent best tours stay selectable.
inline constexpr double kPheromoneFloor = 1e-3;

}  // namespace detail

/// Ant colony search over node pheromones. Each iteration releases the
/// colony from the start node; the best ant that tours at least one
/// uncovered requirement becomes a test case. Runs until every requirement
/// is toured or the iteration budget is spent, in which case the partial
/// suite is returned with `complete == false` and ACO_INCOMPLETE_COVERAGE.
inline TestSuite generate_aco(const ProcessGraph& graph, const LczReport& report,
                              std::span<const TestRequirement> requirements, const GenerationConfig& config) {
    using detail::Index;
    const detail::GenerationContext ctx(graph, report, requirements, config);
    const auto& reqs = ctx.requirements();
    const auto& paths = ctx.paths();
    const auto& aco = config.aco;
    const std::size_t n = graph.size();

    std::vector<bool> covered(reqs.size(), false);
    std::size_t remaining = reqs.size();

    // Attractiveness of a node: how many uncovered requirement entries it
    // still leads to, damped by the distance to the nearest one.
    std::vector<double> eta(n, 1.0);
    std::vector<int> reachable_entries(n, 0);
    auto refresh_heuristic = [&] {
        for (Index s = 0; s < n; ++s) {
            int count = 0;
            int nearest = -1;
            for (std::size_t r = 0; r < reqs.size(); ++r) {
                if (covered[r]) continue;
                const int d = paths.distance(s, reqs[r].entry);
                if (d == kUnreachable) continue;
                ++count;
                if (nearest < 0 || d < nearest) nearest = d;
            }
            reachable_entries[s] = count;
            eta[s] = 1.0 + static_cast<double>(count) / (1.0 + std::max(nearest, 0));
        }
    };
    refresh_heuristic();

    // Zone-interior distance to each requirement's exit, for ants that are
    // part way through touring it.
    std::vector<std::vector<int>> interior(reqs.size());
    for (std::size_t r = 0; r < reqs.size(); ++r) {
        if (!reqs[r].has_exit()) continue;
        std::vector<bool> target(n, false);
        target[reqs[r].last] = true;
        const int zone = reqs[r].zone;
        interior[r] = distances_to(graph, target, [&](Index v) { return ctx.zone_of(v) == zone; });
    }

    std::vector<double> pheromone(n, 1.0);
    std::vector<std::vector<Index>> cases;
    const auto& to_end = paths.end_distances();

    auto run_ant = [&](std::mt19937_64& rng) {
        std::vector<Index> walk{graph.start()};
        std::vector<Index> candidates;
        std::vector<double> weights;
        // Zone nodes visited since the ant last entered its current zone.
        std::vector<Index> stretch;
        auto enter = [&](Index v) {
            const int zone = ctx.zone_of(v);
            if (zone == 0 || stretch.empty() || ctx.zone_of(stretch.front()) != zone) stretch.clear();
            if (zone != 0) stretch.push_back(v);
        };
        auto mid_tour = [&](Index cur) {
            if (stretch.empty()) return false;
            for (std::size_t r = 0; r < reqs.size(); ++r) {
                if (covered[r] || !reqs[r].has_exit() || reqs[r].zone != ctx.zone_of(cur)) continue;
                if (interior[r][cur] == kUnreachable) continue;
                if (std::find(stretch.begin(), stretch.end(), reqs[r].entry) != stretch.end()) return true;
            }
            return false;
        };
        enter(graph.start());
        while (true) {
            const Index cur = walk.back();
            const int used = static_cast<int>(walk.size()) - 1;
            if (graph.is_end(cur) &&
                (graph.successors(cur).empty() || (reachable_entries[cur] == 0 && !mid_tour(cur))))
                break;
            candidates.clear();
            weights.clear();
            double total = 0.0;
            for (auto s : graph.successors(cur)) {
                if (used + 1 + to_end[s] > ctx.cap()) continue;
                const double w = std::pow(pheromone[s], aco.alpha) * std::pow(eta[s], aco.beta);
                candidates.push_back(s);
                weights.push_back(w);
                total += w;
            }
            if (candidates.empty()) break;  // only at an end node with the cap used up
            double pick = detail::unit_uniform(rng) * total;
            std::size_t k = 0;
            while (k + 1 < candidates.size() && pick >= weights[k]) pick -= weights[k++];
            walk.push_back(candidates[k]);
            enter(candidates[k]);
        }
        return walk;
    };

    int iteration = 0;
    for (; iteration < aco.max_iterations && remaining > 0; ++iteration) {
        std::vector<Index> best;
        double best_fitness = -1.0;
        std::size_t best_new = 0;
        for (int ant = 0; ant < aco.ants; ++ant) {
            auto rng = detail::ant_stream(config.seed, static_cast<std::uint64_t>(iteration),
                                          static_cast<std::uint64_t>(ant));
            auto walk = run_ant(rng);
            std::size_t fresh = 0;
            for (auto r : ctx.toured(walk))
                if (!covered[r]) ++fresh;
            const double fitness = static_cast<double>(fresh) / static_cast<double>(walk.size() - 1);
            if (fitness > best_fitness) {
                best_fitness = fitness;
                best_new = fresh;
                best = std::move(walk);
            }
        }

        for (auto& p : pheromone) p = std::max(detail::kPheromoneFloor, p * (1.0 - aco.evaporation));
        std::vector<bool> on_best(n, false);
        for (auto v : best) on_best[v] = true;
        for (Index v = 0; v < n; ++v)
            if (on_best[v]) pheromone[v] += aco.deposit * best_fitness;

        if (best_new > 0) {
            for (auto r : ctx.toured(best)) {
                if (!covered[r]) {
                    covered[r] = true;
                    --remaining;
                }
            }
            cases.push_back(std::move(best));
            refresh_heuristic();
        }
    }

    auto suite = ctx.make_suite(cases, report, Algorithm::aco);
    if (remaining > 0) {
        suite.complete = false;
        suite.diagnostics.push_back(codes::kAcoIncompleteCoverage);
    }
    return suite;
}

}  // namespace lczmbt
