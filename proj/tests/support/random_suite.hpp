#pragma once

#include <random>
#include <string>

#include "lczmbt/checklist.hpp"
#include "lczmbt/generate.hpp"
#include "support/corpus.hpp"

namespace lczmbt::testing {

inline std::string random_text(std::mt19937_64& rng) {
    static const std::string pieces[] = {"a", "Z", "7", " ", "_", "-", ",", "\"", "'", "<", ">", "&",
                                         ";", "\n", "\t", "é", "ß", "→", "{", "}", "\\", "/"};
    const auto len = 1 + rng() % 12;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += pieces[rng() % std::size(pieces)];
    return s;
}

/// Synthetic annotated suite with awkward text in every string field.
inline AnnotatedSuite random_annotated_suite(std::mt19937_64& rng) {
    AnnotatedSuite suite;
    const Algorithm algorithms[] = {Algorithm::spc, Algorithm::aco, Algorithm::epp, Algorithm::portfolio};
    suite.generator = algorithms[rng() % 4];
    if (suite.generator == Algorithm::portfolio) suite.selected = algorithms[rng() % 3];
    suite.complete = rng() % 2 == 0;
    if (!suite.complete) suite.diagnostics.push_back("ACO_INCOMPLETE_COVERAGE");
    suite.config_echo.threshold = Threshold(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
    suite.config_echo.criterion = rng() % 2 ? CoverageCriterion::each_border_node_once
                                            : CoverageCriterion::all_combinations_of_border_nodes;
    suite.config_echo.algorithm = suite.generator;
    suite.config_echo.seed = rng();
    suite.config_echo.walk_cap = 1 + static_cast<int>(rng() % 200);
    suite.config_echo.aco.ants = 1 + static_cast<int>(rng() % 50);
    suite.config_echo.aco.alpha = std::uniform_real_distribution<double>(0.0, 4.0)(rng);
    suite.config_echo.aco.beta = std::uniform_real_distribution<double>(0.0, 4.0)(rng);
    suite.config_echo.aco.evaporation = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
    suite.config_echo.aco.deposit = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
    suite.config_echo.aco.max_iterations = 1 + static_cast<int>(rng() % 1000);

    std::vector<std::string_view> questions;
    for (const auto& q : kInterruptionChecklist) questions.push_back(q.question_id);
    for (const auto& q : kRestorationChecklist) questions.push_back(q.question_id);

    const auto cases = rng() % 5;
    for (std::size_t c = 0; c < cases; ++c) {
        AnnotatedCase tc;
        tc.case_id = "TC" + std::to_string(c + 1);
        const auto steps = 2 + rng() % 8;
        for (std::size_t k = 0; k < steps; ++k) {
            AnnotatedStep s{random_text(rng), random_text(rng), {}};
            const auto annotations = rng() % 3 == 0 ? rng() % 4 : 0;
            for (std::size_t a = 0; a < annotations; ++a)
                s.annotations.emplace_back(questions[rng() % questions.size()]);
            tc.steps.push_back(std::move(s));
        }
        const auto pairs = rng() % 3;
        for (std::size_t p = 0; p < pairs; ++p)
            tc.covered_pairs.push_back({1 + static_cast<int>(rng() % 5), random_text(rng), random_text(rng)});
        suite.total_steps += static_cast<int>(tc.steps.size()) - 1;
        suite.cases.push_back(std::move(tc));
    }
    return suite;
}

/// Annotated suite produced by the generators for a corpus model.
inline AnnotatedSuite generated_annotated_suite(std::mt19937_64& rng, const ProcessModel& model) {
    GenerationConfig config;
    const Algorithm algorithms[] = {Algorithm::spc, Algorithm::aco, Algorithm::epp, Algorithm::portfolio};
    config.algorithm = algorithms[rng() % 4];
    config.criterion = CoverageCriterion::all_combinations_of_border_nodes;
    config.seed = rng() % 1000;
    const ProcessGraph graph(model);
    return generate(graph, config).annotated;
}

}  // namespace lczmbt::testing
