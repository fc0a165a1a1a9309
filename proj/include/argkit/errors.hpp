#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace argkit {

// Bad arguments to the library or CLI: unknown names, mixed frameworks,
// malformed options. Maps to exit code 1.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text. `line` is 1-based; 0 means no useful position.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what : what),
          line(line_) {}
};

// An enumeration or search exceeded its configured bound. `best_bound` carries
// the best lower bound established before giving up, when one exists.
struct CapacityError : std::runtime_error {
    std::optional<int> best_bound;
    explicit CapacityError(const std::string& what, std::optional<int> best = std::nullopt)
        : std::runtime_error(what), best_bound(best) {}
};

} // namespace argkit
