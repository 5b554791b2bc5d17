#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

// Maps onto the CLI exit codes 1, 2 and 3.
enum class ErrorKind { domain, malformed, budget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error domain_error(const std::string& what) { return Error(ErrorKind::domain, what); }
inline Error malformed_error(const std::string& what) { return Error(ErrorKind::malformed, what); }

class BudgetExceeded : public Error {
public:
    BudgetExceeded(unsigned long long estimate, unsigned long long budget)
        : Error(ErrorKind::budget, "state space of " + std::to_string(estimate) +
                                       " exceeds budget " + std::to_string(budget)),
          estimate_(estimate) {}
    unsigned long long estimate() const noexcept { return estimate_; }

private:
    unsigned long long estimate_;
};

}  // namespace recolor
