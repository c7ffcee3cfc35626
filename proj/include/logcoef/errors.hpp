#pragma once

#include <stdexcept>
#include <string>

namespace logcoef {

/// Base of every error raised by the library.
class LabError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public LabError {
public:
    using LabError::LabError;
};

class NotNormalized : public LabError {
public:
    using LabError::LabError;
};

class ZeroOutsideDisk : public LabError {
public:
    using LabError::LabError;
};

class BadRadius : public LabError {
public:
    using LabError::LabError;
};

class OutsideRegion : public LabError {
public:
    using LabError::LabError;
};

class UnknownEdge : public LabError {
public:
    using LabError::LabError;
};

/// The dense-grid sweep beat the analytic maximum: a formula is wrong.
class CertificationMismatch : public LabError {
public:
    using LabError::LabError;
};

class FamilyMismatch : public LabError {
public:
    using LabError::LabError;
};

}  // namespace logcoef
