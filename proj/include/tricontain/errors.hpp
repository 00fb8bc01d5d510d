#pragma once

#include <stdexcept>
#include <string>

namespace tricontain {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input values: parameters outside their documented domain,
// anchors outside the region, malformed geometry. CLI exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// Region with (numerically) zero area.
struct DegenerateRegionError : DomainError {
    using DomainError::DomainError;
};

// Numeric failures: tolerance unreachable within budget. CLI exit code 3.
struct QuadratureError : Error {
    using Error::Error;
};

// Two formulas that must agree disagreed beyond combined tolerance.
struct ConsistencyError : Error {
    using Error::Error;
};

// Rejection sampler gave up (acceptance rate pathologically small).
struct RejectionBudgetError : Error {
    using Error::Error;
};

// Region spec file / inline region string could not be parsed.
// Carries a 1-based line number (0 = not line-specific) and the
// offending field so the CLI can emit a precise diagnostic.
class ParseError : public Error {
public:
    ParseError(int line, std::string field, const std::string& message)
        : Error(format(line, field, message)), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(int line, const std::string& field, const std::string& message) {
        std::string s;
        if (line > 0) s += "line " + std::to_string(line) + ": ";
        if (!field.empty()) s += "field '" + field + "': ";
        s += message;
        return s;
    }

    int line_;
    std::string field_;
};

} // namespace tricontain
