#pragma once

#include <stdexcept>
#include <string>

namespace jamesian {

/// Argument outside the carrier or domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ill-formed request: bad grid, bad parameter, bad threshold, bad input file.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation at (0,0) or (1,1), where no extension exists.
class UndefinedCornerError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Explicit closed form requested at a point outside its region.
class OutOfRegionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A loop handed to a constructor does not satisfy the required hypotheses.
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative numerics failed (e.g. bracket expansion exhausted).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jamesian
