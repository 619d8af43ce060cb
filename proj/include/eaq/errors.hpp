#ifndef EAQ_ERRORS_HPP
#define EAQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eaq {

// Validation errors: bad user input, exit code 2 at the CLI.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPrimeError : ValidationError {
    using ValidationError::ValidationError;
};

struct NotIrreducibleError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnsupportedSizeError : ValidationError {
    using ValidationError::ValidationError;
};

struct FieldMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

struct LengthOutOfRangeError : ValidationError {
    using ValidationError::ValidationError;
};

struct LengthMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

struct OddKappaError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownLabelError : ValidationError {
    using ValidationError::ValidationError;
};

struct LabelMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

struct OutOfRangeError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownVariantError : ValidationError {
    using ValidationError::ValidationError;
};

struct KTooLargeError : ValidationError {
    using ValidationError::ValidationError;
};

// Resource-limit errors: exhaustive regime exceeded, exit code 3 at the CLI.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLargeError : ResourceLimitError {
    using ResourceLimitError::ResourceLimitError;
};

struct RegisterTooLargeError : ResourceLimitError {
    using ResourceLimitError::ResourceLimitError;
};

struct ZeroNormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace eaq

#endif
