#pragma once

#include <stdexcept>
#include <string>

namespace exc {

// An exhaustive routine was asked for an instance larger than its budget.
// Callers are expected to switch to a closed-form method instead.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A result that can only arise from a bug in this library.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw PreconditionError(what);
}

} // namespace exc
