#pragma once

#include <stdexcept>
#include <string>

namespace latcount {

/// A parameter is outside the validated domain of the operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A rational-accumulated count failed the denominator==1 assertion.
class IntegralityError : public std::runtime_error {
public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

/// A request would blow up combinatorially (enumeration over the step cap).
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

/// An arithmetic invariant broke (e.g. a fraction-free division left a
/// remainder). Always indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace latcount
