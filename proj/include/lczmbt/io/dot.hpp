#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lczmbt/lcz.hpp"
#include "lczmbt/model.hpp"
#include "lczmbt/suite.hpp"

namespace lczmbt::io {

namespace dot {

inline std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

// Palette: red border for zone members, yellow entries, blue exits, grey
// decisions, bold test case walks.
inline constexpr const char* kZoneBorder = "red";
inline constexpr const char* kEntryFill = "yellow";
inline constexpr const char* kExitFill = "lightblue";
inline constexpr const char* kDecisionFill = "lightgrey";

}  // namespace dot

inline std::string render_dot(const ProcessGraph& graph, const LczReport& report, const TestSuite* suite = nullptr) {
    std::set<std::string> members, entries, exits;
    for (const auto& z : report.zones) {
        members.insert(z.members.begin(), z.members.end());
        entries.insert(z.entries.begin(), z.entries.end());
        exits.insert(z.exits.begin(), z.exits.end());
    }
    std::set<std::string> bold_nodes;
    std::set<std::pair<std::string, std::string>> bold_edges;
    if (suite) {
        for (const auto& tc : suite->cases) {
            for (std::size_t i = 0; i < tc.steps.size(); ++i) {
                bold_nodes.insert(tc.steps[i]);
                if (i > 0) bold_edges.emplace(tc.steps[i - 1], tc.steps[i]);
            }
        }
    }

    std::ostringstream out;
    out << "digraph process {\n";
    out << "  node [shape=box, style=rounded];\n";
    for (ProcessGraph::Index v = 0; v < graph.size(); ++v) {
        const auto& id = graph.id(v);
        std::vector<std::string> attrs;
        const auto& name = graph.name(v);
        attrs.push_back("label=" + dot::quote(name.empty() ? id : name));
        std::string fill;
        if (entries.count(id))
            fill = dot::kEntryFill;
        else if (exits.count(id))
            fill = dot::kExitFill;
        else if (graph.kind(v) == NodeKind::decision)
            fill = dot::kDecisionFill;
        attrs.push_back(fill.empty() ? "style=rounded" : "style=\"rounded,filled\"");
        if (!fill.empty()) attrs.push_back("fillcolor=\"" + fill + "\"");
        if (members.count(id)) attrs.push_back("color=\"" + std::string(dot::kZoneBorder) + "\"");
        int penwidth = members.count(id) ? 2 : 1;
        if (bold_nodes.count(id)) penwidth += 2;
        if (penwidth != 1) attrs.push_back("penwidth=" + std::to_string(penwidth));
        if (v == graph.start()) attrs.push_back("shape=oval");
        if (graph.is_end(v)) attrs.push_back("peripheries=2");
        out << "  " << dot::quote(id) << " [";
        for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
        out << "];\n";
    }
    auto transitions = graph.model().transitions;
    std::sort(transitions.begin(), transitions.end());
    for (const auto& t : transitions) {
        out << "  " << dot::quote(t.from) << " -> " << dot::quote(t.to);
        std::vector<std::string> attrs;
        if (!t.label.empty()) attrs.push_back("label=" + dot::quote(t.label));
        if (bold_edges.count({t.from, t.to})) attrs.push_back("style=bold, penwidth=3");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace lczmbt::io
