#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lczmbt {

/// Domain failure carrying a stable machine-readable code (e.g.
/// `WALK_CAP_EXCEEDED`, `PARSE_ERROR`) and the locus it refers to.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string message, std::string locus = {})
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          message_(std::move(message)),
          locus_(std::move(locus)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& locus() const noexcept { return locus_; }

private:
    std::string code_;
    std::string message_;
    std::string locus_;
};

namespace codes {
inline constexpr const char* kParseError = "PARSE_ERROR";
inline constexpr const char* kSchemaError = "SCHEMA_ERROR";
inline constexpr const char* kInvalidModel = "INVALID_MODEL";
inline constexpr const char* kInvalidThreshold = "INVALID_THRESHOLD";
inline constexpr const char* kInvalidConfig = "INVALID_CONFIG";
inline constexpr const char* kInfeasibleBorderNode = "INFEASIBLE_BORDER_NODE";
inline constexpr const char* kWalkCapExceeded = "WALK_CAP_EXCEEDED";
inline constexpr const char* kAcoIncompleteCoverage = "ACO_INCOMPLETE_COVERAGE";
}  // namespace codes

}  // namespace lczmbt
