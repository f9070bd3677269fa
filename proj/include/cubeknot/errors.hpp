// Error taxonomy shared by the whole toolkit; the CLI maps these to its
// documented exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace cubeknot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file; `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_)
        : Error("parse error at line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Structurally well-formed input that fails diagram validation.
struct ValidationError : Error {
    std::string report;
    ValidationError(const std::string& msg, std::string report_)
        : Error(msg), report(std::move(report_)) {}
};

struct InvalidInput : Error {
    using Error::Error;
};

struct IllegalMove : Error {
    enum class Reason { interleaved, crossing_broken, pattern_absent, bad_parameters };
    Reason reason;
    IllegalMove(Reason r, const std::string& msg) : Error(msg), reason(r) {}
};

struct BudgetExhausted : Error {
    int best_violation_count;
    BudgetExhausted(int best, const std::string& msg) : Error(msg), best_violation_count(best) {}
};

struct SurgeryFailed : Error {
    using Error::Error;
};

struct ConstraintCycle : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace cubeknot
