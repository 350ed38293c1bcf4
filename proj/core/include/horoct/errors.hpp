#pragma once

#include <stdexcept>
#include <string>

namespace horoct {

// Base for conditions reported to the user. Internal invariant violations
// (broken table, irrational value where a rational is guaranteed) use
// std::logic_error instead and are never caught by the sweep.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed literals, unknown identifiers, contradictory flags.
class UsageError : public Error {
public:
    using Error::Error;
};

// A formula evaluated outside its precondition: D = 0, p + q = 1, an index
// below the formula's range, or parameters outside a specialization's domain.
// The sweep records such points as `inapplicable`.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace horoct
