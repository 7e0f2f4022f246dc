#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pg {

// Error with a source location, thrown by the graph/rule/strategy parsers.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line, std::size_t col = 0)
        : std::runtime_error(format(msg, line, col)), line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t col) {
        std::string s = "line " + std::to_string(line);
        if (col > 0) s += ":" + std::to_string(col);
        return s + ": " + msg;
    }
    std::size_t line_;
    std::size_t col_;
};

class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when the global step budget runs out. Distinct from a Fail outcome.
class StepBudgetExhausted : public EngineError {
public:
    explicit StepBudgetExhausted(long long budget)
        : EngineError("step budget exhausted after " + std::to_string(budget) + " engine steps") {}
};

// A rule whose interface cannot be realized on the given host (e.g. fan-out
// onto a connected port would violate one-edge-per-port).
class RuleApplicationError : public EngineError {
public:
    using EngineError::EngineError;
};

class ReplayDivergence : public EngineError {
public:
    using EngineError::EngineError;
};

}  // namespace pg
