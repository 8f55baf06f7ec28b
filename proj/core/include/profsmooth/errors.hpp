#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace profsmooth {

// Malformed or unreadable numeric input. `line` is 1-based; 0 means the
// problem concerns the input as a whole (e.g. no data records at all).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configuration that is invalid regardless of the data it is applied to
// (even median window, overlapping decision bands, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stage precondition that failed against the actual series, e.g. a window
// longer than the (possibly already shortened) data.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& message)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace profsmooth
