#pragma once

#include <stdexcept>
#include <string>

namespace tncodes {

/// Invalid parameters supplied by the caller (non-prime p, f not dividing k, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A field or enumeration would exceed the configured size budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two evaluation routes that must agree did not. Always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tncodes
