#pragma once

#include <string>
#include <vector>

#include "lczmbt/model.hpp"

namespace lczmbt::testing {

inline ProcessNode node(std::string id, double p, std::string name = {}) {
    ProcessNode n;
    n.id = std::move(id);
    n.name = name.empty() ? n.id : std::move(name);
    n.outage_probability = p;
    return n;
}

/// n1 -> n2 -> {n3, n6}; n3 -> n4 -> n5; n6 -> n5. n3 and n4 are at 0.9.
inline ProcessModel g1() {
    ProcessModel m;
    m.nodes = {node("n1", 0.0, "Open app"),      node("n2", 0.0, "Choose delivery"),
               node("n3", 0.9, "Scan parcel"),   node("n4", 0.9, "Store offline"),
               node("n5", 0.0, "Confirm"),       node("n6", 0.0, "Pick up at branch")};
    m.transitions = {{"n1", "n2", ""}, {"n2", "n3", "courier"}, {"n2", "n6", "branch"},
                     {"n3", "n4", ""}, {"n4", "n5", ""},        {"n6", "n5", ""}};
    m.start = "n1";
    m.ends = {"n5"};
    return m;
}

/// Zone {a, b, c} with entries {a, b} and exits {x, y}.
inline ProcessModel g2() {
    ProcessModel m;
    m.nodes = {node("s", 0.0), node("u", 0.0), node("a", 0.9), node("b", 0.9), node("c", 0.9),
               node("x", 0.0), node("y", 0.0), node("t", 0.0)};
    m.transitions = {{"s", "u", ""}, {"u", "a", ""}, {"u", "b", ""}, {"a", "c", ""}, {"b", "c", ""},
                     {"c", "x", ""}, {"c", "y", ""}, {"x", "t", ""}, {"y", "t", ""}};
    m.start = "s";
    m.ends = {"t"};
    return m;
}

/// n1 -> n2 -> n3 -> n4 -> n5, all online.
inline ProcessModel chain() {
    ProcessModel m;
    for (int i = 1; i <= 5; ++i) m.nodes.push_back(node("n" + std::to_string(i), 0.0));
    for (int i = 1; i < 5; ++i) m.transitions.push_back({"n" + std::to_string(i), "n" + std::to_string(i + 1), ""});
    m.start = "n1";
    m.ends = {"n5"};
    return m;
}

/// n1 -> n2 -> n3 -> n2 loop, n2 -> n4 (end).
inline ProcessModel loop() {
    ProcessModel m;
    m.nodes = {node("n1", 0.0), node("n2", 0.0), node("n3", 0.0), node("n4", 0.0)};
    m.transitions = {{"n1", "n2", ""}, {"n2", "n3", ""}, {"n3", "n2", ""}, {"n2", "n4", ""}};
    m.start = "n1";
    m.ends = {"n4"};
    return m;
}

/// Three cooperating subsystems: subsystem 1 dispatches to subsystems 2 and
/// 3 and continues once they are done. Only subsystem 3 runs on a weak
/// network (0.8); everything else sits at 0.05.
inline ProcessModel three_subsystems() {
    ProcessModel m;
    const double online = 0.05, weak = 0.8;
    m.nodes = {
        node("s1_start", online, "Receive order"),  node("s1_login", online, "Authenticate operator"),
        node("s1_dispatch", online, "Dispatch work"), node("s1_merge", online, "Merge results"),
        node("s1_report", online, "Report"),        node("s1_end", online, "Close order"),
        node("s2_collect", online, "Collect stock"), node("s2_process", online, "Process stock"),
        node("s3_sense", weak, "Read field sensor"), node("s3_check", weak, "Check reading"),
        node("s3_upload", weak, "Upload reading"),  node("s3_cache", weak, "Cache reading"),
        node("s3_confirm", weak, "Confirm reading"),
    };
    m.transitions = {
        {"s1_start", "s1_login", ""},      {"s1_login", "s1_dispatch", ""},  {"s1_dispatch", "s2_collect", ""},
        {"s1_dispatch", "s3_sense", ""},   {"s2_collect", "s2_process", ""}, {"s2_process", "s1_merge", ""},
        {"s3_sense", "s3_check", ""},      {"s3_check", "s3_upload", "ok"},  {"s3_check", "s3_cache", "retry"},
        {"s3_upload", "s3_confirm", ""},   {"s3_cache", "s3_confirm", ""},   {"s3_confirm", "s1_merge", ""},
        {"s1_merge", "s1_report", ""},     {"s1_report", "s1_end", ""},
    };
    m.start = "s1_start";
    m.ends = {"s1_end"};
    return m;
}

}  // namespace lczmbt::testing
