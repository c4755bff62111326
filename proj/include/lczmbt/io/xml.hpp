#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "lczmbt/checklist.hpp"
#include "lczmbt/error.hpp"
#include "lczmbt/io/json.hpp"
#include "lczmbt/model.hpp"
#include "lczmbt/suite.hpp"

namespace lczmbt::io {

namespace xml {

using Tree = boost::property_tree::ptree;

inline std::string escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            case '\n': out += "&#10;"; break;
            case '\r': out += "&#13;"; break;
            case '\t': out += "&#9;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline Tree parse(std::string_view text, const char* root) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw Error(codes::kParseError, "empty document");
    Tree tree;
    std::istringstream in{std::string(text)};
    try {
        boost::property_tree::read_xml(in, tree);
    } catch (const boost::property_tree::xml_parser_error& e) {
        throw Error(codes::kParseError, e.message(), "line " + std::to_string(e.line()));
    }
    const auto it = tree.find(root);
    if (it == tree.not_found()) throw Error(codes::kSchemaError, std::string("missing <") + root + "> root element");
    return it->second;
}

inline const Tree* attributes(const Tree& element) {
    const auto it = element.find("<xmlattr>");
    return it == element.not_found() ? nullptr : &it->second;
}

inline std::optional<std::string> optional_attr(const Tree& element, const char* name) {
    const auto* attrs = attributes(element);
    if (!attrs) return std::nullopt;
    const auto it = attrs->find(name);
    if (it == attrs->not_found()) return std::nullopt;
    return it->second.data();
}

inline std::string attr(const Tree& element, const char* name, const std::string& where) {
    auto v = optional_attr(element, name);
    if (!v) throw Error(codes::kSchemaError, std::string("missing attribute '") + name + "'", where);
    return *v;
}

inline double double_attr(const Tree& element, const char* name, const std::string& where) {
    const auto text = attr(element, name, where);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw Error(codes::kSchemaError, std::string("attribute '") + name + "' must be a number", where);
    return v;
}

template <typename Int>
Int int_attr(const Tree& element, const char* name, const std::string& where) {
    const auto text = attr(element, name, where);
    Int v{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw Error(codes::kSchemaError, std::string("attribute '") + name + "' must be an integer", where);
    return v;
}

inline bool bool_attr(const Tree& element, const char* name, const std::string& where) {
    const auto text = attr(element, name, where);
    if (text == "true") return true;
    if (text == "false") return false;
    throw Error(codes::kSchemaError, std::string("attribute '") + name + "' must be true or false", where);
}

inline void check_schema_version(const Tree& root, const std::string& where) {
    if (attr(root, "schema_version", where) != kSchemaVersion)
        throw Error(codes::kSchemaError, "unsupported schema_version", where);
}

}  // namespace xml

// ---------------------------------------------------------------- models

inline ProcessModel parse_model_xml(std::string_view text) {
    const auto root = xml::parse(text, "process-model");
    xml::check_schema_version(root, "process-model");
    ProcessModel model;
    model.start = xml::attr(root, "start", "process-model");
    for (const auto& [tag, child] : root) {
        if (tag == "end") {
            model.ends.push_back(xml::attr(child, "node", "end"));
        } else if (tag == "node") {
            ProcessNode node;
            node.id = xml::attr(child, "id", "node");
            node.name = xml::optional_attr(child, "name").value_or(node.id);
            if (auto kind = xml::optional_attr(child, "kind")) node.kind = detail::parse_kind(*kind, node.id);
            node.outage_probability = xml::optional_attr(child, "outage_probability")
                                          ? xml::double_attr(child, "outage_probability", node.id)
                                          : 0.0;
            if (!(node.outage_probability >= 0.0 && node.outage_probability <= 1.0))
                throw Error(codes::kSchemaError,
                            "outage_probability of node '" + node.id + "' must lie in [0, 1]", node.id);
            model.nodes.push_back(std::move(node));
        } else if (tag == "transition") {
            Transition t{xml::attr(child, "from", "transition"), xml::attr(child, "to", "transition"),
                         xml::optional_attr(child, "label").value_or("")};
            if (xml::optional_attr(child, "outage_probability"))
                throw Error(codes::kSchemaError, "outage probabilities belong to nodes, not transitions",
                            edge_locus(t));
            model.transitions.push_back(std::move(t));
        }
    }
    return model;
}

inline std::string emit_model_xml(const ProcessModel& model) {
    auto nodes = model.nodes;
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    auto transitions = model.transitions;
    std::sort(transitions.begin(), transitions.end());
    auto ends = model.ends;
    std::sort(ends.begin(), ends.end());

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<process-model schema_version=\"" << kSchemaVersion << "\" start=\"" << xml::escape(model.start)
        << "\">\n";
    for (const auto& e : ends) out << "  <end node=\"" << xml::escape(e) << "\"/>\n";
    for (const auto& n : nodes) {
        out << "  <node id=\"" << xml::escape(n.id) << "\" name=\"" << xml::escape(n.name) << "\"";
        if (n.kind) out << " kind=\"" << to_string(*n.kind) << "\"";
        out << " outage_probability=\"" << xml::format_double(n.outage_probability) << "\"/>\n";
    }
    for (const auto& t : transitions) {
        out << "  <transition from=\"" << xml::escape(t.from) << "\" to=\"" << xml::escape(t.to) << "\"";
        if (!t.label.empty()) out << " label=\"" << xml::escape(t.label) << "\"";
        out << "/>\n";
    }
    out << "</process-model>\n";
    return out.str();
}

// ---------------------------------------------------------------- suites

inline std::string emit_suite_xml(const AnnotatedSuite& suite) {
    std::ostringstream out;
    const auto& c = suite.config_echo;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<test-suite schema_version=\"" << kSchemaVersion << "\" generator=\"" << to_string(suite.generator) << "\"";
    if (suite.selected) out << " selected_algorithm=\"" << to_string(*suite.selected) << "\"";
    out << " complete=\"" << (suite.complete ? "true" : "false") << "\" total_steps=\"" << suite.total_steps
        << "\">\n";
    out << "  <config-echo threshold=\"" << xml::format_double(c.threshold.value()) << "\" coverage=\""
        << to_string(c.criterion) << "\" algorithm=\"" << to_string(c.algorithm) << "\" seed=\"" << c.seed
        << "\" walk_cap=\"" << c.walk_cap << "\">\n";
    out << "    <aco ants=\"" << c.aco.ants << "\" alpha=\"" << xml::format_double(c.aco.alpha) << "\" beta=\""
        << xml::format_double(c.aco.beta) << "\" evaporation=\"" << xml::format_double(c.aco.evaporation)
        << "\" deposit=\"" << xml::format_double(c.aco.deposit) << "\" max_iterations=\"" << c.aco.max_iterations
        << "\"/>\n";
    out << "  </config-echo>\n";
    for (const auto& d : suite.diagnostics) out << "  <diagnostic code=\"" << xml::escape(d) << "\"/>\n";
    for (const auto& tc : suite.cases) {
        out << "  <test-case id=\"" << xml::escape(tc.case_id) << "\">\n";
        for (const auto& p : tc.covered_pairs)
            out << "    <covered-pair zone_id=\"" << p.zone_id << "\" entry=\"" << xml::escape(p.entry)
                << "\" exit=\"" << xml::escape(p.exit) << "\"/>\n";
        for (std::size_t i = 0; i < tc.steps.size(); ++i) {
            const auto& s = tc.steps[i];
            std::string annotations;
            for (const auto& a : s.annotations) annotations += (annotations.empty() ? "" : ";") + a;
            out << "    <step index=\"" << i + 1 << "\" node_id=\"" << xml::escape(s.node_id) << "\" node_name=\""
                << xml::escape(s.node_name) << "\" annotations=\"" << annotations << "\"/>\n";
        }
        out << "  </test-case>\n";
    }
    out << "</test-suite>\n";
    return out.str();
}

inline AnnotatedSuite parse_suite_xml(std::string_view text) {
    const auto root = xml::parse(text, "test-suite");
    const std::string where = "test-suite";
    xml::check_schema_version(root, where);
    AnnotatedSuite suite;
    suite.generator = detail::rethrow_as_schema([&] { return parse_algorithm(xml::attr(root, "generator", where)); },
                                                "generator");
    if (auto sel = xml::optional_attr(root, "selected_algorithm"))
        suite.selected = detail::rethrow_as_schema([&] { return parse_algorithm(*sel); }, "selected_algorithm");
    suite.complete = xml::bool_attr(root, "complete", where);
    suite.total_steps = xml::int_attr<int>(root, "total_steps", where);

    bool have_config = false;
    int recomputed = 0;
    for (const auto& [tag, child] : root) {
        if (tag == "config-echo") {
            have_config = true;
            const std::string w = "config-echo";
            const auto aco = child.find("aco");
            if (aco == child.not_found()) throw Error(codes::kSchemaError, "missing <aco> element", w);
            Json j = Json::object();
            j["threshold"] = xml::double_attr(child, "threshold", w);
            j["coverage"] = xml::attr(child, "coverage", w);
            j["algorithm"] = xml::attr(child, "algorithm", w);
            j["seed"] = xml::int_attr<std::uint64_t>(child, "seed", w);
            j["walk_cap"] = xml::int_attr<int>(child, "walk_cap", w);
            j["aco"] = Json{{"ants", xml::int_attr<int>(aco->second, "ants", w)},
                            {"alpha", xml::double_attr(aco->second, "alpha", w)},
                            {"beta", xml::double_attr(aco->second, "beta", w)},
                            {"evaporation", xml::double_attr(aco->second, "evaporation", w)},
                            {"deposit", xml::double_attr(aco->second, "deposit", w)},
                            {"max_iterations", xml::int_attr<int>(aco->second, "max_iterations", w)}};
            suite.config_echo = config_from_json(j);
        } else if (tag == "diagnostic") {
            suite.diagnostics.push_back(xml::attr(child, "code", "diagnostic"));
        } else if (tag == "test-case") {
            AnnotatedCase tc;
            tc.case_id = xml::attr(child, "id", "test-case");
            int expected_index = 1;
            for (const auto& [ctag, item] : child) {
                if (ctag == "covered-pair") {
                    tc.covered_pairs.push_back({xml::int_attr<int>(item, "zone_id", tc.case_id),
                                                xml::attr(item, "entry", tc.case_id),
                                                xml::attr(item, "exit", tc.case_id)});
                } else if (ctag == "step") {
                    if (xml::int_attr<int>(item, "index", tc.case_id) != expected_index++)
                        throw Error(codes::kSchemaError, "step indices must run 1, 2, ...", tc.case_id);
                    AnnotatedStep s{xml::attr(item, "node_id", tc.case_id), xml::attr(item, "node_name", tc.case_id),
                                    {}};
                    const auto annotations = xml::attr(item, "annotations", tc.case_id);
                    std::size_t pos = 0;
                    while (pos < annotations.size()) {
                        auto next = annotations.find(';', pos);
                        if (next == std::string::npos) next = annotations.size();
                        auto id = annotations.substr(pos, next - pos);
                        if (!find_checklist_question(id))
                            throw Error(codes::kSchemaError, "unknown checklist question '" + id + "'", tc.case_id);
                        s.annotations.push_back(std::move(id));
                        pos = next + 1;
                    }
                    tc.steps.push_back(std::move(s));
                }
            }
            if (tc.steps.empty()) throw Error(codes::kSchemaError, "test case without steps", tc.case_id);
            recomputed += static_cast<int>(tc.steps.size()) - 1;
            suite.cases.push_back(std::move(tc));
        }
    }
    if (!have_config) throw Error(codes::kSchemaError, "missing <config-echo> element", where);
    if (recomputed != suite.total_steps)
        throw Error(codes::kSchemaError, "total_steps does not match the cases", "total_steps");
    return suite;
}

}  // namespace lczmbt::io
