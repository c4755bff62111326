#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "lczmbt/checklist.hpp"

namespace lczmbt::io {

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// One row per (case, step). Export only: the configuration echo and the
/// covered pairs are not part of the CSV dialect.
inline std::string emit_suite_csv(const AnnotatedSuite& suite) {
    std::ostringstream out;
    out << "test_case_id,step_index,node_id,node_name,annotations\n";
    for (const auto& tc : suite.cases) {
        for (std::size_t i = 0; i < tc.steps.size(); ++i) {
            const auto& s = tc.steps[i];
            std::string annotations;
            for (const auto& a : s.annotations) annotations += (annotations.empty() ? "" : ";") + a;
            out << csv_field(tc.case_id) << ',' << i + 1 << ',' << csv_field(s.node_id) << ','
                << csv_field(s.node_name) << ',' << csv_field(annotations) << '\n';
        }
    }
    return out.str();
}

}  // namespace lczmbt::io
