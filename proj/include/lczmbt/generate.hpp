#pragma once

#include <vector>

#include "lczmbt/checklist.hpp"
#include "lczmbt/coverage.hpp"
#include "lczmbt/lcz.hpp"
#include "lczmbt/portfolio.hpp"

namespace lczmbt {

inline TestSuite run_generator(const ProcessGraph& graph, const LczReport& report,
                               std::span<const TestRequirement> requirements, const GenerationConfig& config) {
    switch (config.algorithm) {
        case Algorithm::spc: return generate_spc(graph, report, requirements, config);
        case Algorithm::aco: return generate_aco(graph, report, requirements, config);
        case Algorithm::epp: return generate_epp(graph, report, requirements, config);
        case Algorithm::portfolio: return generate_portfolio(graph, report, requirements, config);
    }
    throw Error(codes::kInvalidConfig, "unknown algorithm");
}

struct GenerationResult {
    LczReport report;
    std::vector<TestRequirement> requirements;
    TestSuite suite;
    AnnotatedSuite annotated;
};

/// Zones, requirements, suite and annotations for one configuration.
inline GenerationResult generate(const ProcessGraph& graph, const GenerationConfig& config) {
    check_config(config);
    GenerationResult result{compute_lczs(graph, config.threshold), {}, {}, {}};
    result.requirements = build_requirements(graph, result.report, config.criterion);
    result.suite = run_generator(graph, result.report, result.requirements, config);
    result.annotated = annotate_suite(graph, result.suite, result.report);
    return result;
}

}  // namespace lczmbt
