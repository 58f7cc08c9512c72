#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

// Error taxonomy shared by every module. Each condition gets its own type so
// callers can catch precisely; `code()` gives a stable machine-readable tag
// for the CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error("DivisionByZero", what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError", what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// A predicate or operation that cannot be decided at the stored cutoff.
// Tells the caller "raise the cutoff", never "the answer is no".
struct UnresolvedAtTruncation : Error {
    explicit UnresolvedAtTruncation(const std::string& what =
                                        "cannot resolve at stored truncation cutoff")
        : Error("UnresolvedAtTruncation", what) {}
};

// Exact value does not exist in the implemented representation
// (e.g. sqrt of a non-square rational, sin at a nonzero rational point).
struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& what)
        : Error("NotRepresentable", what) {}
};

struct NotFinite : Error {
    explicit NotFinite(const std::string& what = "element is infinitely large")
        : Error("NotFinite", what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "expansion term budget exceeded")
        : Error("BudgetExceeded", what) {}
};

struct ExponentGroupViolation : Error {
    explicit ExponentGroupViolation(const std::string& what)
        : Error("ExponentGroupViolation", what) {}
};

struct UnsupportedSpec : Error {
    explicit UnsupportedSpec(const std::string& what) : Error("UnsupportedSpec", what) {}
};

} // namespace nonarch
