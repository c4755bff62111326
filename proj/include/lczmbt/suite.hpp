#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lczmbt/coverage.hpp"
#include "lczmbt/error.hpp"
#include "lczmbt/lcz.hpp"

namespace lczmbt {

enum class Algorithm { spc, aco, epp, portfolio };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::spc: return "spc";
        case Algorithm::aco: return "aco";
        case Algorithm::epp: return "epp";
        case Algorithm::portfolio: return "portfolio";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "spc") return Algorithm::spc;
    if (s == "aco") return Algorithm::aco;
    if (s == "epp") return Algorithm::epp;
    if (s == "portfolio") return Algorithm::portfolio;
    throw Error(codes::kSchemaError, "unknown algorithm '" + s + "'", s);
}

struct AcoParameters {
    int ants = 20;
    double alpha = 1.0;
    double beta = 2.0;
    double evaporation = 0.5;
    double deposit = 1.0;
    int max_iterations = 500;

    bool operator==(const AcoParameters&) const = default;
};

struct GenerationConfig {
    Threshold threshold{0.5};
    CoverageCriterion criterion = CoverageCriterion::each_border_node_once;
    Algorithm algorithm = Algorithm::portfolio;
    std::uint64_t seed = 0;
    AcoParameters aco;
    /// Maximum steps (edges) per test case; 0 selects 4 x |nodes|.
    int walk_cap = 0;

    bool operator==(const GenerationConfig&) const = default;
};

inline void check_config(const GenerationConfig& c) {
    auto fail = [](const char* what) { throw Error(codes::kInvalidConfig, what); };
    if (c.aco.ants < 1) fail("aco.ants must be at least 1");
    if (!(c.aco.evaporation > 0.0 && c.aco.evaporation < 1.0)) fail("aco.evaporation must lie in (0, 1)");
    if (!(c.aco.alpha >= 0.0) || !(c.aco.beta >= 0.0)) fail("aco.alpha and aco.beta must be non-negative");
    if (!(c.aco.deposit >= 0.0)) fail("aco.deposit must be non-negative");
    if (c.aco.max_iterations < 1) fail("aco.max_iterations must be at least 1");
    if (c.walk_cap < 0) fail("walk_cap must be non-negative");
}

struct TestCase {
    std::string case_id;
    std::vector<std::string> steps;
    std::vector<CoveredPair> covered_pairs;  // sorted

    int step_count() const { return steps.empty() ? 0 : static_cast<int>(steps.size()) - 1; }
    bool operator==(const TestCase&) const = default;
};

/// Outcome of one algorithm inside a portfolio run.
struct AlgorithmSummary {
    Algorithm algorithm = Algorithm::spc;
    bool ran = false;  // false when the algorithm failed with `error`
    int total_steps = 0;
    std::size_t cases = 0;
    bool complete = false;
    std::string error;

    bool operator==(const AlgorithmSummary&) const = default;
};

struct TestSuite {
    std::vector<TestCase> cases;
    int total_steps = 0;
    Algorithm generator = Algorithm::spc;
    /// For portfolio runs, the algorithm whose suite was kept.
    std::optional<Algorithm> selected;
    bool complete = true;
    std::vector<std::string> diagnostics;
    GenerationConfig config_echo;
    std::vector<AlgorithmSummary> portfolio;

    std::vector<std::vector<std::string>> walks() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : cases) out.push_back(c.steps);
        return out;
    }

    bool operator==(const TestSuite&) const = default;
};

inline int total_steps(const std::vector<TestCase>& cases) {
    int total = 0;
    for (const auto& c : cases) total += c.step_count();
    return total;
}

inline CoverageVerdict verify_suite(const ProcessGraph& graph, const LczReport& report, CoverageCriterion criterion,
                                    const TestSuite& suite) {
    const auto walks = suite.walks();
    return verify_suite(graph, report, criterion, walks);
}

}  // namespace lczmbt
