#ifndef CSCORE_ERRORS_HPP
#define CSCORE_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cscore {

enum class ErrorKind {
    domain,          // argument outside the mathematical domain of a metric
    degenerate,      // dataset or class without ground-truth positives
    infeasible,      // no precision in (0,1] realizes the requested curve point
    empty_curve,     // no feasible recall for an isocurve
    unknown_ratio,   // cost ratio not present in a sweep
    length_mismatch, // parallel sequences of different length
    config,          // invalid generator configuration
    parse,           // malformed input text
    range,           // well-formed input value out of bounds
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::infeasible: return "infeasible";
        case ErrorKind::empty_curve: return "empty_curve";
        case ErrorKind::unknown_ratio: return "unknown_ratio";
        case ErrorKind::length_mismatch: return "length_mismatch";
        case ErrorKind::config: return "config";
        case ErrorKind::parse: return "parse";
        case ErrorKind::range: return "range";
    }
    return "unknown";
}

/// Single exception type for the library. The kind drives CLI exit codes;
/// input errors additionally carry the 1-based line they were found on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(line ? what + " (line " + std::to_string(*line) + ")" : what),
          kind_(kind),
          line_(line) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
};

namespace detail {
[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }
}  // namespace detail

}  // namespace cscore

#endif  // CSCORE_ERRORS_HPP
