#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ssc {

// Every library failure derives from Error; kind() is the stable machine-readable tag
// used by the command-line diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// A precondition on the inputs was violated (bad prime, index out of range, wrong parity...).
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("domain_error", w) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error("division_by_zero", w) {}
};

// a + b*sqrt(q) is nonzero but a^2 - q*b^2 vanishes in Q(zeta_N).
struct DegenerateExtension : Error {
    explicit DegenerateExtension(const std::string& w) : Error("formal_extension_degenerate", w) {}
};

struct DecompositionFailure : Error {
    explicit DecompositionFailure(const std::string& w) : Error("decomposition_failure", w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("budget_exceeded", w) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& w) : Error("gcd_hypothesis_violated", w) {}
};

struct InconsistentProfile : Error {
    explicit InconsistentProfile(const std::string& w) : Error("inconsistent_profile", w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse_error", w) {}
};

}  // namespace ssc
