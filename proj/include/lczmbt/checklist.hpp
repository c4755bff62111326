#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lczmbt/lcz.hpp"
#include "lczmbt/model.hpp"
#include "lczmbt/suite.hpp"

namespace lczmbt {

enum class ChecklistPhase { interruption, restoration };

struct ChecklistAnnotation {
    ChecklistPhase phase;
    std::string_view question_id;
    std::string_view text;
};

// Questions asked when connectivity drops (entry nodes) and when it comes
// back (exit nodes).
inline constexpr std::array<ChecklistAnnotation, 4> kInterruptionChecklist{{
    {ChecklistPhase::interruption, "INT-1", "Will the system correctly inform the user (where relevant)?"},
    {ChecklistPhase::interruption, "INT-2",
     "If data are collected, are they stored in a cache, or are they lost? If they are stored in a cache, how "
     "long can the cache hold the collected data?"},
    {ChecklistPhase::interruption, "INT-3",
     "If a device or module affected by the limited connection accepts signals or commands from other devices "
     "or parts of the system, are these parts notified that the device or module is offline?"},
    {ChecklistPhase::interruption, "INT-4",
     "If the data or signals are processed in transactions, does the system maintain this transactional "
     "behavior when the network connection is interrupted?"},
}};

inline constexpr std::array<ChecklistAnnotation, 5> kRestorationChecklist{{
    {ChecklistPhase::restoration, "RES-1",
     "If relevant, is the user or operator notified that the connectivity had been restored?"},
    {ChecklistPhase::restoration, "RES-2",
     "If a device or part of the system uses caching to overcome network outages, is the cached content "
     "correctly transmitted to the respective parts?"},
    {ChecklistPhase::restoration, "RES-3", "Has the consistency of the stored data been maintained?"},
    {ChecklistPhase::restoration, "RES-4",
     "If there are cached transactions, are they finished correctly? Have the logical order or required "
     "timing of their steps been maintained?"},
    {ChecklistPhase::restoration, "RES-5",
     "Is the performance of the system not (unacceptably) affected by the return of the device or module to "
     "online mode?"},
}};

inline const ChecklistAnnotation* find_checklist_question(std::string_view id) {
    for (const auto& q : kInterruptionChecklist)
        if (q.question_id == id) return &q;
    for (const auto& q : kRestorationChecklist)
        if (q.question_id == id) return &q;
    return nullptr;
}

struct AnnotatedStep {
    std::string node_id;
    std::string node_name;
    std::vector<std::string> annotations;  // question ids

    bool operator==(const AnnotatedStep&) const = default;
};

struct AnnotatedCase {
    std::string case_id;
    std::vector<AnnotatedStep> steps;
    std::vector<CoveredPair> covered_pairs;

    bool operator==(const AnnotatedCase&) const = default;
};

/// A suite ready for export: every step carries the checklist questions
/// that apply to it.
struct AnnotatedSuite {
    std::vector<AnnotatedCase> cases;
    int total_steps = 0;
    Algorithm generator = Algorithm::spc;
    std::optional<Algorithm> selected;
    bool complete = true;
    std::vector<std::string> diagnostics;
    GenerationConfig config_echo;

    std::vector<std::vector<std::string>> walks() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : cases) {
            auto& walk = out.emplace_back();
            for (const auto& s : c.steps) walk.push_back(s.node_id);
        }
        return out;
    }

    bool operator==(const AnnotatedSuite&) const = default;
};

inline AnnotatedSuite annotate_suite(const ProcessGraph& graph, const TestSuite& suite, const LczReport& report) {
    std::set<std::string> entries, exits;
    for (const auto& zone : report.zones) {
        entries.insert(zone.entries.begin(), zone.entries.end());
        exits.insert(zone.exits.begin(), zone.exits.end());
    }
    AnnotatedSuite out{{}, suite.total_steps, suite.generator, suite.selected,
                       suite.complete, suite.diagnostics, suite.config_echo};
    for (const auto& tc : suite.cases) {
        AnnotatedCase ac{tc.case_id, {}, tc.covered_pairs};
        for (const auto& id : tc.steps) {
            AnnotatedStep step{id, graph.name(graph.index_of(id)), {}};
            if (entries.count(id))
                for (const auto& q : kInterruptionChecklist) step.annotations.emplace_back(q.question_id);
            if (exits.count(id))
                for (const auto& q : kRestorationChecklist) step.annotations.emplace_back(q.question_id);
            ac.steps.push_back(std::move(step));
        }
        out.cases.push_back(std::move(ac));
    }
    return out;
}

/// Drops the annotations again; the result is what `verify_suite` consumes.
inline TestSuite strip_annotations(const AnnotatedSuite& annotated) {
    TestSuite suite;
    suite.total_steps = annotated.total_steps;
    suite.generator = annotated.generator;
    suite.selected = annotated.selected;
    suite.complete = annotated.complete;
    suite.diagnostics = annotated.diagnostics;
    suite.config_echo = annotated.config_echo;
    for (const auto& c : annotated.cases) {
        TestCase tc{c.case_id, {}, c.covered_pairs};
        for (const auto& s : c.steps) tc.steps.push_back(s.node_id);
        suite.cases.push_back(std::move(tc));
    }
    return suite;
}

}  // namespace lczmbt
