#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lczmbt/checklist.hpp"
#include "lczmbt/coverage.hpp"
#include "lczmbt/error.hpp"
#include "lczmbt/lcz.hpp"
#include "lczmbt/model.hpp"
#include "lczmbt/suite.hpp"

namespace lczmbt::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

[[noreturn]] inline void schema_error(const std::string& message, const std::string& locus = {}) {
    throw Error(codes::kSchemaError, message, locus);
}

inline Json parse_json_text(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw Error(codes::kParseError, "empty document");
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(codes::kParseError, e.what(), "byte " + std::to_string(e.byte));
    }
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) schema_error(where + " must be an object", where);
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(std::string("missing field '") + key + "'", where);
    return *it;
}

inline std::string string_field(const Json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_string()) schema_error(std::string("field '") + key + "' must be a string", where);
    return v.get<std::string>();
}

inline std::string optional_string(const Json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) return {};
    if (!it->is_string()) schema_error(std::string("field '") + key + "' must be a string", where);
    return it->get<std::string>();
}

inline double number_field(const Json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number()) schema_error(std::string("field '") + key + "' must be a number", where);
    return v.get<double>();
}

inline long long integer_field(const Json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number_integer()) schema_error(std::string("field '") + key + "' must be an integer", where);
    return v.get<long long>();
}

inline bool bool_field(const Json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_boolean()) schema_error(std::string("field '") + key + "' must be a boolean", where);
    return v.get<bool>();
}

inline const Json& array_field(const Json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_array()) schema_error(std::string("field '") + key + "' must be an array", where);
    return v;
}

inline void check_schema_version(const Json& doc, const std::string& where) {
    if (string_field(doc, "schema_version", where) != kSchemaVersion)
        schema_error("unsupported schema_version", where);
}

inline NodeKind parse_kind(const std::string& s, const std::string& where) {
    if (s == "action") return NodeKind::action;
    if (s == "decision") return NodeKind::decision;
    schema_error("unknown node kind '" + s + "'", where);
}

template <typename F>
auto rethrow_as_schema(F&& f, const std::string& where) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == codes::kSchemaError) throw;
        schema_error(e.message(), where);
    }
}

}  // namespace detail

// ---------------------------------------------------------------- models

inline ProcessModel model_from_json(const Json& doc) {
    using namespace detail;
    check_schema_version(doc, "document");
    const auto& m = field(doc, "model", "document");
    ProcessModel model;
    model.start = string_field(m, "start", "model");
    for (const auto& e : array_field(m, "ends", "model")) {
        if (!e.is_string()) schema_error("end node ids must be strings", "model.ends");
        model.ends.push_back(e.get<std::string>());
    }
    for (const auto& n : array_field(m, "nodes", "model")) {
        ProcessNode node;
        node.id = string_field(n, "id", "model.nodes");
        node.name = n.contains("name") ? string_field(n, "name", node.id) : node.id;
        if (n.contains("kind")) node.kind = parse_kind(string_field(n, "kind", node.id), node.id);
        node.outage_probability = n.contains("outage_probability") ? number_field(n, "outage_probability", node.id) : 0.0;
        if (!(node.outage_probability >= 0.0 && node.outage_probability <= 1.0))
            schema_error("outage_probability of node '" + node.id + "' must lie in [0, 1]", node.id);
        model.nodes.push_back(std::move(node));
    }
    if (m.contains("transitions")) {
        for (const auto& t : array_field(m, "transitions", "model")) {
            Transition tr{string_field(t, "from", "model.transitions"), string_field(t, "to", "model.transitions"),
                          optional_string(t, "label", "model.transitions")};
            if (t.contains("outage_probability"))
                schema_error("outage probabilities belong to nodes, not transitions", edge_locus(tr));
            model.transitions.push_back(std::move(tr));
        }
    }
    return model;
}

/// Canonical document: nodes sorted by id, transitions sorted, ends sorted.
inline Json model_to_json(const ProcessModel& model) {
    auto nodes = model.nodes;
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    auto transitions = model.transitions;
    std::sort(transitions.begin(), transitions.end());
    auto ends = model.ends;
    std::sort(ends.begin(), ends.end());

    Json m = Json::object();
    m["start"] = model.start;
    m["ends"] = ends;
    m["nodes"] = Json::array();
    for (const auto& n : nodes) {
        Json j = Json::object();
        j["id"] = n.id;
        j["name"] = n.name;
        if (n.kind) j["kind"] = to_string(*n.kind);
        j["outage_probability"] = n.outage_probability;
        m["nodes"].push_back(std::move(j));
    }
    m["transitions"] = Json::array();
    for (const auto& t : transitions) {
        Json j = Json::object();
        j["from"] = t.from;
        j["to"] = t.to;
        if (!t.label.empty()) j["label"] = t.label;
        m["transitions"].push_back(std::move(j));
    }
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["model"] = std::move(m);
    return doc;
}

inline ProcessModel parse_model_json(std::string_view text) { return model_from_json(detail::parse_json_text(text)); }
inline std::string emit_model_json(const ProcessModel& model) { return model_to_json(model).dump(2) + "\n"; }

// ---------------------------------------------------------------- reports

inline Json to_json(const ValidationReport& report) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["ok"] = report.ok();
    j["issues"] = Json::array();
    for (const auto& i : report.issues) {
        Json issue = Json::object();
        issue["severity"] = i.severity == Severity::error ? "error" : "warning";
        issue["code"] = i.code;
        issue["locus"] = i.locus;
        issue["message"] = i.message;
        j["issues"].push_back(std::move(issue));
    }
    return j;
}

inline Json to_json(const LczReport& report) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["threshold"] = report.threshold.value();
    j["zones"] = Json::array();
    for (const auto& z : report.zones) {
        Json zone = Json::object();
        zone["zone_id"] = z.zone_id;
        zone["members"] = z.members;
        zone["entries"] = z.entries;
        zone["exits"] = z.exits;
        j["zones"].push_back(std::move(zone));
    }
    j["warnings"] = Json::array();
    for (const auto& w : report.warnings) {
        Json warning = Json::object();
        warning["code"] = w.code;
        if (w.zone_id != 0) warning["zone_id"] = w.zone_id;
        if (!w.node.empty()) warning["node"] = w.node;
        warning["message"] = w.message;
        j["warnings"].push_back(std::move(warning));
    }
    return j;
}

inline Json to_json(const CoverageVerdict& verdict) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["satisfied"] = verdict.satisfied;
    j["uncovered_pairs"] = Json::array();
    for (const auto& p : verdict.uncovered_pairs)
        j["uncovered_pairs"].push_back(Json{{"zone_id", p.zone_id}, {"entry", p.entry}, {"exit", p.exit}});
    j["uncovered_nodes"] = Json::array();
    for (const auto& n : verdict.uncovered_nodes)
        j["uncovered_nodes"].push_back(Json{{"zone_id", n.zone_id},
                                            {"node", n.node},
                                            {"role", n.role == BorderRole::entry ? "entry" : "exit"}});
    return j;
}

inline Json error_to_json(const Error& e) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["error"] = Json{{"code", e.code()}, {"message", e.message()}, {"locus", e.locus()}};
    return j;
}

// ---------------------------------------------------------------- config

inline Json to_json(const GenerationConfig& c) {
    Json j = Json::object();
    j["threshold"] = c.threshold.value();
    j["coverage"] = to_string(c.criterion);
    j["algorithm"] = to_string(c.algorithm);
    j["seed"] = c.seed;
    j["walk_cap"] = c.walk_cap;
    j["aco"] = Json{{"ants", c.aco.ants},
                    {"alpha", c.aco.alpha},
                    {"beta", c.aco.beta},
                    {"evaporation", c.aco.evaporation},
                    {"deposit", c.aco.deposit},
                    {"max_iterations", c.aco.max_iterations}};
    return j;
}

/// Every field is optional and falls back to the defaults of
/// GenerationConfig; present fields are type- and range-checked.
inline GenerationConfig config_from_json(const Json& j) {
    using namespace detail;
    if (!j.is_object()) schema_error("generation config must be an object", "config");
    GenerationConfig c;
    const std::string where = "config";
    if (j.contains("threshold"))
        c.threshold = rethrow_as_schema([&] { return Threshold(number_field(j, "threshold", where)); }, "threshold");
    if (j.contains("coverage"))
        c.criterion = rethrow_as_schema([&] { return parse_criterion(string_field(j, "coverage", where)); }, "coverage");
    if (j.contains("algorithm"))
        c.algorithm = rethrow_as_schema([&] { return parse_algorithm(string_field(j, "algorithm", where)); },
                                        "algorithm");
    if (j.contains("seed")) {
        const auto& s = j.at("seed");
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
            schema_error("seed must be a non-negative integer", "seed");
        c.seed = s.get<std::uint64_t>();
    }
    if (j.contains("walk_cap")) c.walk_cap = static_cast<int>(integer_field(j, "walk_cap", where));
    if (j.contains("aco")) {
        const auto& a = j.at("aco");
        const std::string w = "config.aco";
        if (!a.is_object()) schema_error("aco must be an object", w);
        if (a.contains("ants")) c.aco.ants = static_cast<int>(integer_field(a, "ants", w));
        if (a.contains("alpha")) c.aco.alpha = number_field(a, "alpha", w);
        if (a.contains("beta")) c.aco.beta = number_field(a, "beta", w);
        if (a.contains("evaporation")) c.aco.evaporation = number_field(a, "evaporation", w);
        if (a.contains("deposit")) c.aco.deposit = number_field(a, "deposit", w);
        if (a.contains("max_iterations")) c.aco.max_iterations = static_cast<int>(integer_field(a, "max_iterations", w));
    }
    rethrow_as_schema([&] { check_config(c); return 0; }, "config");
    return c;
}

// ---------------------------------------------------------------- suites

inline Json to_json(const AnnotatedSuite& suite) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["generator"] = to_string(suite.generator);
    if (suite.selected) j["selected_algorithm"] = to_string(*suite.selected);
    j["complete"] = suite.complete;
    j["diagnostics"] = suite.diagnostics;
    j["total_steps"] = suite.total_steps;
    j["config_echo"] = to_json(suite.config_echo);
    j["cases"] = Json::array();
    for (const auto& c : suite.cases) {
        Json jc = Json::object();
        jc["case_id"] = c.case_id;
        jc["covered_pairs"] = Json::array();
        for (const auto& p : c.covered_pairs)
            jc["covered_pairs"].push_back(Json{{"zone_id", p.zone_id}, {"entry", p.entry}, {"exit", p.exit}});
        jc["steps"] = Json::array();
        for (std::size_t i = 0; i < c.steps.size(); ++i) {
            const auto& s = c.steps[i];
            jc["steps"].push_back(Json{{"index", i + 1},
                                       {"node_id", s.node_id},
                                       {"node_name", s.node_name},
                                       {"annotations", s.annotations}});
        }
        j["cases"].push_back(std::move(jc));
    }
    return j;
}

inline AnnotatedSuite suite_from_json(const Json& j) {
    using namespace detail;
    check_schema_version(j, "suite");
    AnnotatedSuite suite;
    suite.generator = rethrow_as_schema([&] { return parse_algorithm(string_field(j, "generator", "suite")); },
                                        "generator");
    if (j.contains("selected_algorithm"))
        suite.selected = rethrow_as_schema(
            [&] { return parse_algorithm(string_field(j, "selected_algorithm", "suite")); }, "selected_algorithm");
    suite.complete = bool_field(j, "complete", "suite");
    for (const auto& d : array_field(j, "diagnostics", "suite")) {
        if (!d.is_string()) schema_error("diagnostics must be strings", "suite.diagnostics");
        suite.diagnostics.push_back(d.get<std::string>());
    }
    suite.total_steps = static_cast<int>(integer_field(j, "total_steps", "suite"));
    suite.config_echo = config_from_json(field(j, "config_echo", "suite"));
    int recomputed = 0;
    for (const auto& jc : array_field(j, "cases", "suite")) {
        AnnotatedCase c;
        c.case_id = string_field(jc, "case_id", "suite.cases");
        for (const auto& p : array_field(jc, "covered_pairs", c.case_id))
            c.covered_pairs.push_back({static_cast<int>(integer_field(p, "zone_id", c.case_id)),
                                       string_field(p, "entry", c.case_id), string_field(p, "exit", c.case_id)});
        long long expected_index = 1;
        for (const auto& js : array_field(jc, "steps", c.case_id)) {
            if (integer_field(js, "index", c.case_id) != expected_index++)
                schema_error("step indices must run 1, 2, ...", c.case_id);
            AnnotatedStep s{string_field(js, "node_id", c.case_id), string_field(js, "node_name", c.case_id), {}};
            for (const auto& a : array_field(js, "annotations", c.case_id)) {
                if (!a.is_string() || !find_checklist_question(a.get<std::string>()))
                    schema_error("unknown checklist question", c.case_id);
                s.annotations.push_back(a.get<std::string>());
            }
            c.steps.push_back(std::move(s));
        }
        if (c.steps.empty()) schema_error("test case without steps", c.case_id);
        recomputed += static_cast<int>(c.steps.size()) - 1;
        suite.cases.push_back(std::move(c));
    }
    if (recomputed != suite.total_steps) schema_error("total_steps does not match the cases", "suite.total_steps");
    return suite;
}

}  // namespace lczmbt::io
