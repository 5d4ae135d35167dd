#pragma once

#include <stdexcept>
#include <string>

namespace secsheaf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid algebraic data: broken operation tables, non-closed subsets,
// values over mismatched parents.
class StructureError : public Error {
public:
    using Error::Error;
};

// An operation was invoked outside its stated hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured enumeration cap was exceeded.
class CapacityError : public Error {
public:
    CapacityError(const std::string& what, long long limit)
        : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
    long long limit() const { return limit_; }

private:
    long long limit_;
};

// Two independent computations of the same value disagreed.  Always an
// implementation bug, never a property of the input.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input document.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace secsheaf
