#ifndef GB_ERRORS_HPP
#define GB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Category bases; the CLI maps them to exit codes (config = 1, numeric = 2, io = 3).
struct ConfigError : Error {
    using Error::Error;
};
struct NumericError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

struct NoGenerator : NumericError {
    using NumericError::NumericError;
};
struct MonotonicityViolation : NumericError {
    using NumericError::NumericError;
};
struct OrderOutOfRange : NumericError {
    using NumericError::NumericError;
};
struct IndexOutOfRange : NumericError {
    using NumericError::NumericError;
};
struct NotApplicable : NumericError {
    using NumericError::NumericError;
};
struct NodeCollision : NumericError {
    using NumericError::NumericError;
};
struct DomainError : NumericError {
    using NumericError::NumericError;
};
struct SequenceTooShort : NumericError {
    using NumericError::NumericError;
};
struct WeightOutOfRange : NumericError {
    using NumericError::NumericError;
};
struct PrefixMismatch : NumericError {
    using NumericError::NumericError;
};
struct InsufficientData : NumericError {
    using NumericError::NumericError;
};
struct InvalidArgument : NumericError {
    using NumericError::NumericError;
};

struct ConfigParseError : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace gb

#endif
