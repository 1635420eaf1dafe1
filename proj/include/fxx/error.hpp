#pragma once

#include <stdexcept>
#include <string>

namespace fxx {

// Input or contract precondition violated (bad parameters, breached barrier,
// classification boundary). The CLI maps these to exit code 3.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A KIKO replication row cannot be matched against the declared barrier layout.
class ClassificationError : public DomainError {
public:
    using DomainError::DomainError;
};

// Spot sits too close to a barrier for a finite-difference stencil.
class ProximityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Valid inputs that still fail numerically. The CLI maps these to exit code 4.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IllConditionedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace fxx
