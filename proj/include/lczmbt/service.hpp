#pragma once

#include <chrono>
#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <regex>
#include <string>
#include <unordered_map>

#include "httplib.h"
#include "lczmbt/generate.hpp"
#include "lczmbt/io.hpp"

namespace lczmbt::service {

inline constexpr const char* kModelNotFound = "MODEL_NOT_FOUND";
inline constexpr const char* kSuiteNotFound = "SUITE_NOT_FOUND";
inline constexpr const char* kSuiteModelMismatch = "SUITE_MODEL_MISMATCH";
inline constexpr const char* kRouteNotFound = "ROUTE_NOT_FOUND";
inline constexpr const char* kMethodNotAllowed = "METHOD_NOT_ALLOWED";
inline constexpr const char* kValidationFailed = "VALIDATION_FAILED";

struct Request {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

/// Accepted model with its graph, frozen at upload time.
struct StoredModel {
    std::string id;
    ProcessModel model;
    ProcessGraph graph;
    ValidationReport validation;
    std::chrono::system_clock::time_point created_at;
};

struct StoredSuite {
    std::string id;
    std::string model_id;
    TestSuite suite;
    AnnotatedSuite annotated;
};

/// Bounded in-memory store. Lookups hand out shared snapshots, so requests
/// keep working on a model even if it is evicted meanwhile.
class SessionStore {
public:
    explicit SessionStore(std::size_t capacity = 100) : capacity_(capacity == 0 ? 1 : capacity) {}

    std::size_t capacity() const { return capacity_; }

    std::shared_ptr<const StoredModel> add_model(ProcessModel model, ValidationReport validation) {
        std::lock_guard lock(mutex_);
        auto graph = ProcessGraph(model);
        auto entry = std::make_shared<const StoredModel>(
            StoredModel{next_id("m"), std::move(model), std::move(graph), std::move(validation),
                        std::chrono::system_clock::now()});
        insert(models_, model_order_, entry->id, entry);
        return entry;
    }

    std::shared_ptr<const StoredSuite> add_suite(std::string model_id, TestSuite suite, AnnotatedSuite annotated) {
        std::lock_guard lock(mutex_);
        auto entry = std::make_shared<const StoredSuite>(
            StoredSuite{next_id("s"), std::move(model_id), std::move(suite), std::move(annotated)});
        insert(suites_, suite_order_, entry->id, entry);
        return entry;
    }

    std::shared_ptr<const StoredModel> model(const std::string& id) {
        std::lock_guard lock(mutex_);
        return touch(models_, model_order_, id);
    }

    std::shared_ptr<const StoredSuite> suite(const std::string& id) {
        std::lock_guard lock(mutex_);
        return touch(suites_, suite_order_, id);
    }

    std::size_t model_count() const {
        std::lock_guard lock(mutex_);
        return models_.size();
    }

private:
    template <class T>
    using Slot = std::pair<std::shared_ptr<const T>, std::list<std::string>::iterator>;

    template <class T>
    void insert(std::unordered_map<std::string, Slot<T>>& map, std::list<std::string>& order, const std::string& id,
                std::shared_ptr<const T> value) {
        order.push_front(id);
        map[id] = {std::move(value), order.begin()};
        while (map.size() > capacity_) {
            map.erase(order.back());
            order.pop_back();
        }
    }

    template <class T>
    std::shared_ptr<const T> touch(std::unordered_map<std::string, Slot<T>>& map, std::list<std::string>& order,
                                   const std::string& id) {
        const auto it = map.find(id);
        if (it == map.end()) return nullptr;
        order.splice(order.begin(), order, it->second.second);
        return it->second.first;
    }

    std::string next_id(const char* prefix) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%s%llx-%016llx", prefix, static_cast<unsigned long long>(++counter_),
                      static_cast<unsigned long long>(rng_()));
        return buf;
    }

    mutable std::mutex mutex_;
    std::size_t capacity_;
    std::uint64_t counter_ = 0;
    std::mt19937_64 rng_{std::random_device{}()};
    std::unordered_map<std::string, Slot<StoredModel>> models_;
    std::list<std::string> model_order_;
    std::unordered_map<std::string, Slot<StoredSuite>> suites_;
    std::list<std::string> suite_order_;
};

struct ServiceOptions {
    std::size_t max_models = 100;
    std::string cors_origin = "http://localhost:5173";
};

class ApiService {
public:
    explicit ApiService(ServiceOptions options = {}) : options_(std::move(options)), store_(options_.max_models) {}

    const ServiceOptions& options() const { return options_; }
    SessionStore& store() { return store_; }

    Response handle(const Request& request) {
        try {
            return route(request);
        } catch (const Error& e) {
            return error(status_for(e.code()), e);
        } catch (const std::exception& e) {
            return error(500, Error("INTERNAL_ERROR", e.what()));
        }
    }

    /// Routes every request of `server` through `handle`, adding CORS and
    /// schema version headers.
    void mount(httplib::Server& server) {
        auto forward = [this](const httplib::Request& req, httplib::Response& res) {
            Request request{req.method, req.path, {}, req.body};
            for (const auto& [key, value] : req.params) request.query.emplace(key, value);
            const auto response = handle(request);
            res.status = response.status;
            res.set_content(response.body, response.content_type);
            res.set_header("X-Schema-Version", io::kSchemaVersion);
            set_cors(res);
        };
        server.Get(".*", forward);
        server.Post(".*", forward);
        server.Put(".*", forward);
        server.Delete(".*", forward);
        server.Options(".*", [this](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
            set_cors(res);
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
            res.set_header("X-Schema-Version", io::kSchemaVersion);
        });
    }

private:
    static int status_for(const std::string& code) {
        if (code == kModelNotFound || code == kSuiteNotFound || code == kRouteNotFound) return 404;
        if (code == kMethodNotAllowed) return 405;
        if (code == codes::kInfeasibleBorderNode || code == codes::kWalkCapExceeded) return 422;
        return 400;
    }

    static Response json(int status, const io::Json& body) { return {status, "application/json", body.dump(2) + "\n"}; }
    static Response error(int status, const Error& e) { return json(status, io::error_to_json(e)); }

    void set_cors(httplib::Response& res) const {
        if (!options_.cors_origin.empty()) {
            res.set_header("Access-Control-Allow-Origin", options_.cors_origin);
            res.set_header("Vary", "Origin");
        }
    }

    std::shared_ptr<const StoredModel> model_or_throw(const std::string& id) {
        auto m = store_.model(id);
        if (!m) throw Error(kModelNotFound, "no model with this id", id);
        return m;
    }

    std::shared_ptr<const StoredSuite> suite_or_throw(const std::string& id) {
        auto s = store_.suite(id);
        if (!s) throw Error(kSuiteNotFound, "no suite with this id", id);
        return s;
    }

    static Threshold threshold_from_text(const std::string& text) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size()) throw Error(codes::kInvalidThreshold, "threshold is not a number", text);
        return Threshold(value);
    }

    Response route(const Request& r) {
        static const std::regex model_path(R"(^/models/([^/]+)$)");
        static const std::regex lcz_path(R"(^/models/([^/]+)/lcz$)");
        static const std::regex generate_path(R"(^/models/([^/]+)/generate$)");
        static const std::regex dot_path(R"(^/models/([^/]+)/dot$)");
        static const std::regex suite_path(R"(^/suites/([^/]+)$)");
        std::smatch m;
        auto expect = [&](const char* method) {
            if (r.method != method)
                throw Error(kMethodNotAllowed, "use " + std::string(method) + " for this resource", r.path);
        };

        if (r.path == "/models") {
            expect("POST");
            return post_model(r);
        }
        if (std::regex_match(r.path, m, model_path)) {
            expect("GET");
            return get_model(m[1]);
        }
        if (std::regex_match(r.path, m, lcz_path)) {
            expect("POST");
            return post_lcz(m[1], r);
        }
        if (std::regex_match(r.path, m, generate_path)) {
            expect("POST");
            return post_generate(m[1], r);
        }
        if (std::regex_match(r.path, m, dot_path)) {
            expect("GET");
            return get_dot(m[1], r);
        }
        if (std::regex_match(r.path, m, suite_path)) {
            expect("GET");
            return get_suite(m[1], r);
        }
        throw Error(kRouteNotFound, "unknown resource", r.path);
    }

    Response post_model(const Request& r) {
        auto model = io::parse_model_json(r.body);
        auto validation = validate(model);
        if (!validation.ok()) {
            auto body = io::error_to_json(Error(kValidationFailed, "model has validation errors"));
            body["validation"] = io::to_json(validation);
            return json(400, body);
        }
        const auto stored = store_.add_model(std::move(model), validation);
        io::Json body = io::Json::object();
        body["schema_version"] = io::kSchemaVersion;
        body["model_id"] = stored->id;
        body["validation"] = io::to_json(stored->validation);
        return json(200, body);
    }

    Response get_model(const std::string& id) {
        const auto stored = model_or_throw(id);
        auto doc = io::model_to_json(stored->model);
        io::Json body = io::Json::object();
        body["schema_version"] = io::kSchemaVersion;
        body["model_id"] = stored->id;
        body["model"] = std::move(doc["model"]);
        return json(200, body);
    }

    Response post_lcz(const std::string& id, const Request& r) {
        const auto stored = model_or_throw(id);
        Threshold threshold;
        if (r.body.find_first_not_of(" \t\r\n") != std::string::npos) {
            const auto doc = io::detail::parse_json_text(r.body);
            if (!doc.is_object()) throw Error(codes::kSchemaError, "body must be an object", "body");
            if (doc.contains("threshold")) {
                if (!doc.at("threshold").is_number())
                    throw Error(codes::kSchemaError, "threshold must be a number", "threshold");
                threshold = Threshold(doc.at("threshold").get<double>());
            }
        }
        return json(200, io::to_json(compute_lczs(stored->graph, threshold)));
    }

    Response post_generate(const std::string& id, const Request& r) {
        const auto stored = model_or_throw(id);
        GenerationConfig config;
        if (r.body.find_first_not_of(" \t\r\n") != std::string::npos)
            config = io::config_from_json(io::detail::parse_json_text(r.body));
        auto result = generate(stored->graph, config);
        const auto saved = store_.add_suite(stored->id, std::move(result.suite), std::move(result.annotated));
        io::Json body = io::Json::object();
        body["schema_version"] = io::kSchemaVersion;
        body["suite_id"] = saved->id;
        body["model_id"] = stored->id;
        body["suite"] = io::to_json(saved->annotated);
        if (!saved->suite.portfolio.empty()) {
            body["portfolio"] = io::Json::array();
            for (const auto& s : saved->suite.portfolio)
                body["portfolio"].push_back(io::Json{{"algorithm", to_string(s.algorithm)},
                                                     {"ran", s.ran},
                                                     {"total_steps", s.total_steps},
                                                     {"cases", s.cases},
                                                     {"complete", s.complete},
                                                     {"error", s.error}});
        }
        return json(200, body);
    }

    Response get_suite(const std::string& id, const Request& r) {
        const auto stored = suite_or_throw(id);
        const auto it = r.query.find("format");
        const auto format = io::parse_suite_format(it == r.query.end() ? "json" : it->second);
        auto exported = io::export_suite(stored->annotated, format);
        static const std::map<io::SuiteFormat, const char*> content_types{
            {io::SuiteFormat::json, "application/json"},
            {io::SuiteFormat::xml, "application/xml"},
            {io::SuiteFormat::csv, "text/csv"}};
        return {200, content_types.at(format), std::move(exported.payload)};
    }

    Response get_dot(const std::string& id, const Request& r) {
        const auto stored = model_or_throw(id);
        Threshold threshold;
        if (const auto it = r.query.find("threshold"); it != r.query.end()) threshold = threshold_from_text(it->second);
        std::shared_ptr<const StoredSuite> suite;
        if (const auto it = r.query.find("suite"); it != r.query.end()) {
            suite = suite_or_throw(it->second);
            if (suite->model_id != stored->id)
                throw Error(kSuiteModelMismatch, "suite was generated for another model", it->second);
        }
        const auto report = compute_lczs(stored->graph, threshold);
        return {200, "text/vnd.graphviz", io::render_dot(stored->graph, report, suite ? &suite->suite : nullptr)};
    }

    ServiceOptions options_;
    SessionStore store_;
};

}  // namespace lczmbt::service
