#ifndef SRMDP_ERRORS_HPP
#define SRMDP_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace srmdp {

using BigInt = boost::multiprecision::cpp_int;

// Base of all library errors. CLI maps these to exit codes and report entries.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: parameters, field specs, malformed matrices, parse failures.
struct ConfigError : Error {
    using Error::Error;
};

struct NotPrime : ConfigError {
    using ConfigError::ConfigError;
};
struct NotMonic : ConfigError {
    using ConfigError::ConfigError;
};
struct Reducible : ConfigError {
    using ConfigError::ConfigError;
};
struct NotPrimitive : ConfigError {
    using ConfigError::ConfigError;
};
struct UnsupportedField : ConfigError {
    using ConfigError::ConfigError;
};
struct ParamsInvalid : ConfigError {
    using ConfigError::ConfigError;
};
struct FormatError : ConfigError {
    using ConfigError::ConfigError;
};

// Arithmetic / algebra failures.
struct MixedFields : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct Singular : Error {
    using Error::Error;
};
struct SingularA0 : Singular {
    using Singular::Singular;
};
struct Inconsistent : Error {
    using Error::Error;
};
struct PatternMismatch : Error {
    using Error::Error;
};
struct NotFound : Error {
    using Error::Error;
};

// A search or factorization would exceed the configured budget.  `required`
// carries the size the caller would need to allow for the call to complete.
struct BudgetExceeded : Error {
    BigInt required;
    BigInt budget;
    BudgetExceeded(const std::string& what, BigInt required_, BigInt budget_)
        : Error(what), required(std::move(required_)), budget(std::move(budget_)) {}
};

// A postcondition that proven theory guarantees failed to hold; indicates a
// bug in this library rather than in the inputs.
struct InternalCheckFailure : Error {
    using Error::Error;
};

}  // namespace srmdp

#endif
