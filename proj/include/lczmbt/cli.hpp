#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lczmbt/generate.hpp"
#include "lczmbt/io.hpp"
#include "lczmbt/service.hpp"

namespace lczmbt::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

inline constexpr const char* kIoError = "IO_ERROR";
inline constexpr const char* kSeedVariable = "LCZ_MBT_SEED";

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(kIoError, "cannot read file", path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw Error(kIoError, "cannot write file", path);
}

inline ProcessModel load_model(const std::string& path) {
    return io::parse_model(read_file(path), io::model_format_for(path));
}

inline std::string join(const std::vector<std::string>& items, const char* sep = ",") {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
    return out.empty() ? "-" : out;
}

inline std::string pair_text(const CoveredPair& p) {
    return "zone " + std::to_string(p.zone_id) + " " + p.entry + " -> " + (p.exit.empty() ? "(none)" : p.exit);
}

/// Input problems exit with 2, everything the analysis itself rejects with 1.
inline int exit_code_for(const std::string& code) {
    if (code == kIoError || code == codes::kParseError || code == codes::kSchemaError ||
        code == codes::kInvalidThreshold || code == codes::kInvalidConfig)
        return kUsageError;
    return kDomainFailure;
}

inline std::uint64_t seed_from_environment() {
    const char* text = std::getenv(kSeedVariable);
    if (!text || !*text) return 0;
    char* end = nullptr;
    errno = 0;
    const auto value = std::strtoull(text, &end, 10);
    if (errno != 0 || *end != '\0' || text[0] == '-')
        throw Error(codes::kInvalidConfig, std::string(kSeedVariable) + " must be a non-negative integer", text);
    return value;
}

inline void print_issues(const ValidationReport& report, std::ostream& out) {
    if (report.issues.empty()) {
        out << "model is valid\n";
        return;
    }
    for (const auto& i : report.issues)
        out << (i.severity == Severity::error ? "error   " : "warning ") << i.code << ' ' << i.locus << ": "
            << i.message << '\n';
    out << report.error_count() << " error(s), " << report.issues.size() - report.error_count() << " warning(s)\n";
}

inline void print_zones(const LczReport& report, std::ostream& out) {
    out << "threshold: " << io::xml::format_double(report.threshold.value()) << '\n';
    out << "zone  members  entries  exits\n";
    for (const auto& z : report.zones)
        out << std::left << std::setw(6) << z.zone_id << join(z.members) << "  " << join(z.entries) << "  "
            << join(z.exits) << '\n';
    for (const auto& w : report.warnings) {
        out << "warning " << w.code;
        if (w.zone_id) out << " zone " << w.zone_id;
        out << ": " << w.message << '\n';
    }
}

inline void print_summary(const TestSuite& suite, std::ostream& out) {
    out << "generator: " << to_string(suite.generator);
    if (suite.selected) out << " (selected " << to_string(*suite.selected) << ')';
    out << '\n';
    out << "cases: " << suite.cases.size() << '\n';
    out << "total_steps: " << suite.total_steps << '\n';
    out << "complete: " << (suite.complete ? "yes" : "no") << '\n';
    for (const auto& d : suite.diagnostics) out << "diagnostic: " << d << '\n';
    for (const auto& s : suite.portfolio) {
        out << "  " << std::left << std::setw(4) << to_string(s.algorithm);
        if (!s.ran) {
            out << " failed " << s.error << '\n';
            continue;
        }
        out << " total_steps " << s.total_steps << " cases " << s.cases << (s.complete ? " complete" : " incomplete")
            << '\n';
    }
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Limited connectivity zone test generator", "lczmbt"};
    app.require_subcommand(1);

    std::string model_path, suite_path, output_path, dot_path, coverage = "ebno", algorithm = "portfolio", format;
    double threshold = 0.5;
    std::optional<std::uint64_t> seed;
    int walk_cap = 0;
    std::optional<int> max_iterations;

    auto* validate_cmd = app.add_subcommand("validate", "Check a model for structural problems");
    validate_cmd->add_option("model", model_path, "Model file (.json or .xml)")->required();

    auto* lcz_cmd = app.add_subcommand("lcz", "List the limited connectivity zones of a model");
    lcz_cmd->add_option("model", model_path, "Model file (.json or .xml)")->required();
    lcz_cmd->add_option("--threshold", threshold, "Outage probability threshold")->capture_default_str();
    lcz_cmd->add_option("--dot", dot_path, "Write a Graphviz rendering of the zones");

    auto* generate_cmd = app.add_subcommand("generate", "Generate an annotated test suite");
    generate_cmd->add_option("model", model_path, "Model file (.json or .xml)")->required();
    generate_cmd->add_option("--threshold", threshold, "Outage probability threshold")->capture_default_str();
    generate_cmd->add_option("--coverage", coverage, "ebno or all-pairs")->capture_default_str();
    generate_cmd->add_option("--algorithm", algorithm, "spc, aco, epp or portfolio")->capture_default_str();
    generate_cmd->add_option("--seed", seed, "Random seed (default: $LCZ_MBT_SEED or 0)");
    generate_cmd->add_option("--walk-cap", walk_cap, "Maximum steps per test case (0: 4 x node count)");
    generate_cmd->add_option("--max-iterations", max_iterations, "ACO iteration budget");
    generate_cmd->add_option("--format", format, "json, xml or csv (default: from the output file name)");
    generate_cmd->add_option("-o,--output", output_path, "Suite file to write")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a suite against a coverage criterion");
    verify_cmd->add_option("model", model_path, "Model file (.json or .xml)")->required();
    verify_cmd->add_option("suite", suite_path, "Suite file (.json or .xml)")->required();
    verify_cmd->add_option("--threshold", threshold, "Outage probability threshold")->capture_default_str();
    verify_cmd->add_option("--coverage", coverage, "ebno or all-pairs")->capture_default_str();

    auto* export_cmd = app.add_subcommand("export", "Convert a suite to another format");
    export_cmd->add_option("suite", suite_path, "Suite file (.json or .xml)")->required();
    export_cmd->add_option("--format", format, "json, xml or csv (default: from the output file name)");
    export_cmd->add_option("-o,--output", output_path, "File to write")->required();

    std::string host = "127.0.0.1";
    int port = 8080;
    service::ServiceOptions service_options;
    auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
    serve_cmd->add_option("--host", host, "Bind address")->capture_default_str();
    serve_cmd->add_option("--port", port, "Port")->capture_default_str()->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--cors-origin", service_options.cors_origin, "Allowed browser origin")
        ->capture_default_str();
    serve_cmd->add_option("--max-models", service_options.max_models, "Models kept in memory")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*validate_cmd) {
            const auto report = validate(detail::load_model(model_path));
            detail::print_issues(report, out);
            return report.ok() ? kOk : kDomainFailure;
        }
        if (*lcz_cmd) {
            const Threshold t(threshold);
            const ProcessGraph graph(detail::load_model(model_path));
            const auto report = compute_lczs(graph, t);
            detail::print_zones(report, out);
            if (!dot_path.empty()) detail::write_file(dot_path, io::render_dot(graph, report));
            return kOk;
        }
        if (*generate_cmd) {
            GenerationConfig config;
            config.threshold = Threshold(threshold);
            config.criterion = parse_criterion(coverage);
            config.algorithm = parse_algorithm(algorithm);
            config.seed = seed ? *seed : detail::seed_from_environment();
            config.walk_cap = walk_cap;
            if (max_iterations) config.aco.max_iterations = *max_iterations;
            const auto suite_format = format.empty() ? io::suite_format_for(output_path) : io::parse_suite_format(format);
            const ProcessGraph graph(detail::load_model(model_path));
            const auto result = generate(graph, config);
            detail::write_file(output_path, io::export_suite(result.annotated, suite_format).payload);
            detail::print_summary(result.suite, out);
            return result.suite.complete ? kOk : kDomainFailure;
        }
        if (*verify_cmd) {
            const Threshold t(threshold);
            const auto criterion = parse_criterion(coverage);
            const ProcessGraph graph(detail::load_model(model_path));
            const auto suite =
                io::import_suite(detail::read_file(suite_path), io::suite_format_for(suite_path));
            const auto report = compute_lczs(graph, t);
            bool walks_ok = true;
            for (const auto& c : suite.cases) {
                std::vector<std::string> walk;
                for (const auto& s : c.steps) walk.push_back(s.node_id);
                if (!walk_is_valid(graph, walk)) {
                    out << "invalid walk: " << c.case_id << '\n';
                    walks_ok = false;
                }
            }
            const auto walks = suite.walks();
            const auto verdict = verify_suite(graph, report, criterion, walks);
            for (const auto& n : verdict.uncovered_nodes)
                out << "uncovered " << (n.role == BorderRole::entry ? "entry" : "exit") << ": zone " << n.zone_id
                    << ' ' << n.node << '\n';
            for (const auto& p : verdict.uncovered_pairs) out << "uncovered pair: " << detail::pair_text(p) << '\n';
            const bool satisfied = verdict.satisfied && walks_ok;
            out << "verdict: " << (satisfied ? "satisfied" : "not satisfied") << " (" << to_string(criterion) << ")\n";
            return satisfied ? kOk : kDomainFailure;
        }
        if (*export_cmd) {
            const auto suite = io::import_suite(detail::read_file(suite_path), io::suite_format_for(suite_path));
            const auto suite_format = format.empty() ? io::suite_format_for(output_path) : io::parse_suite_format(format);
            detail::write_file(output_path, io::export_suite(suite, suite_format).payload);
            out << "wrote " << suite.cases.size() << " case(s) as " << io::to_string(suite_format) << '\n';
            return kOk;
        }
        if (*serve_cmd) {
            service::ApiService api(service_options);
            httplib::Server server;
            api.mount(server);
            if (!server.bind_to_port(host, port)) throw Error(kIoError, "cannot bind", host + ":" + std::to_string(port));
            out << "listening on http://" << host << ':' << port << std::endl;
            server.listen_after_bind();
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.code() << ": " << e.message();
        if (!e.locus().empty()) err << " (" << e.locus() << ')';
        err << '\n';
        return detail::exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace lczmbt::cli
