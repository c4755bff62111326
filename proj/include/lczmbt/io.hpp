#pragma once

#include <string>
#include <string_view>

#include "lczmbt/io/csv.hpp"
#include "lczmbt/io/dot.hpp"
#include "lczmbt/io/json.hpp"
#include "lczmbt/io/xml.hpp"

namespace lczmbt::io {

enum class ModelFormat { json, xml };
enum class SuiteFormat { csv, xml, json };

inline const char* to_string(SuiteFormat f) {
    switch (f) {
        case SuiteFormat::csv: return "csv";
        case SuiteFormat::xml: return "xml";
        case SuiteFormat::json: return "json";
    }
    return "?";
}

inline SuiteFormat parse_suite_format(const std::string& s) {
    if (s == "csv") return SuiteFormat::csv;
    if (s == "xml") return SuiteFormat::xml;
    if (s == "json") return SuiteFormat::json;
    throw Error(codes::kSchemaError, "unknown suite format '" + s + "'", s);
}

/// Picks the format from a file name: `.xml` is XML, anything else JSON.
inline ModelFormat model_format_for(std::string_view path) {
    return path.ends_with(".xml") ? ModelFormat::xml : ModelFormat::json;
}
inline SuiteFormat suite_format_for(std::string_view path) {
    if (path.ends_with(".xml")) return SuiteFormat::xml;
    if (path.ends_with(".csv")) return SuiteFormat::csv;
    return SuiteFormat::json;
}

/// Reads a model document. Structural rules are not checked here; run
/// `validate` on the result.
inline ProcessModel parse_model(std::string_view text, ModelFormat format) {
    return format == ModelFormat::xml ? parse_model_xml(text) : parse_model_json(text);
}

inline std::string emit_model(const ProcessModel& model, ModelFormat format) {
    return format == ModelFormat::xml ? emit_model_xml(model) : emit_model_json(model);
}

struct SuiteExport {
    SuiteFormat format = SuiteFormat::json;
    std::string payload;
};

inline SuiteExport export_suite(const AnnotatedSuite& suite, SuiteFormat format) {
    switch (format) {
        case SuiteFormat::csv: return {format, emit_suite_csv(suite)};
        case SuiteFormat::xml: return {format, emit_suite_xml(suite)};
        case SuiteFormat::json: return {format, to_json(suite).dump(2) + "\n"};
    }
    return {};
}

/// JSON and XML only; CSV drops too much to be read back.
inline AnnotatedSuite import_suite(std::string_view text, SuiteFormat format) {
    switch (format) {
        case SuiteFormat::json: return suite_from_json(detail::parse_json_text(text));
        case SuiteFormat::xml: return parse_suite_xml(text);
        case SuiteFormat::csv: break;
    }
    throw Error(codes::kSchemaError, "CSV suites are export-only");
}

}  // namespace lczmbt::io
