#pragma once

#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "lczmbt/aco.hpp"
#include "lczmbt/epp.hpp"
#include "lczmbt/spc.hpp"

namespace lczmbt {

/// Suites of every portfolio member; `nullopt` where the member failed.
struct PortfolioRun {
    std::optional<TestSuite> spc, aco, epp;
    std::vector<AlgorithmSummary> summaries;
    std::optional<Error> first_error;
};

inline PortfolioRun run_portfolio_members(const ProcessGraph& graph, const LczReport& report,
                                          std::span<const TestRequirement> requirements,
                                          const GenerationConfig& config) {
    PortfolioRun run;
    auto attempt = [&](Algorithm algorithm, auto&& generator, std::optional<TestSuite>& slot) {
        AlgorithmSummary summary{algorithm, false, 0, 0, false, {}};
        try {
            slot = generator(graph, report, requirements, config);
            summary.ran = true;
            summary.total_steps = slot->total_steps;
            summary.cases = slot->cases.size();
            summary.complete = slot->complete;
        } catch (const Error& e) {
            if (e.code() != codes::kWalkCapExceeded) throw;
            summary.error = e.code();
            if (!run.first_error) run.first_error = e;
        }
        run.summaries.push_back(summary);
    };
    attempt(Algorithm::spc, generate_spc, run.spc);
    attempt(Algorithm::aco, generate_aco, run.aco);
    attempt(Algorithm::epp, generate_epp, run.epp);
    return run;
}

/// Runs spc, aco and epp and keeps the complete suite with the fewest total
/// steps (then fewest cases, then spc < aco < epp). If no member is
/// complete, the suite touring the most requirements is returned.
inline TestSuite generate_portfolio(const ProcessGraph& graph, const LczReport& report,
                                    std::span<const TestRequirement> requirements, const GenerationConfig& config) {
    auto run = run_portfolio_members(graph, report, requirements, config);
    const std::vector<std::pair<Algorithm, std::optional<TestSuite>*>> members{
        {Algorithm::spc, &run.spc}, {Algorithm::aco, &run.aco}, {Algorithm::epp, &run.epp}};

    const TestSuite* best = nullptr;
    Algorithm best_algorithm = Algorithm::spc;
    for (const auto& [algorithm, slot] : members) {
        if (!*slot || !(*slot)->complete) continue;
        const auto& s = **slot;
        if (!best || std::tuple(s.total_steps, s.cases.size()) < std::tuple(best->total_steps, best->cases.size())) {
            best = &s;
            best_algorithm = algorithm;
        }
    }
    if (!best) {
        std::size_t best_toured = 0;
        for (const auto& [algorithm, slot] : members) {
            if (!*slot) continue;
            std::set<CoveredPair> toured;
            for (const auto& c : (*slot)->cases) toured.insert(c.covered_pairs.begin(), c.covered_pairs.end());
            std::size_t hits = 0;
            for (const auto& r : requirements) hits += toured.count(r.pair());
            if (!best || hits > best_toured) {
                best = &**slot;
                best_algorithm = algorithm;
                best_toured = hits;
            }
        }
    }
    if (!best) throw *run.first_error;

    TestSuite out = *best;
    out.generator = Algorithm::portfolio;
    out.selected = best_algorithm;
    out.portfolio = run.summaries;
    out.config_echo.algorithm = config.algorithm;
    return out;
}

}  // namespace lczmbt
