#pragma once

#include <stdexcept>
#include <string>

namespace semitoric {

// Domain errors: the requested quantity is not defined for these inputs.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfFocusFocusRange : DomainError {
    explicit OutOfFocusFocusRange(const std::string& what) : DomainError(what) {}
};

struct ModulusOutOfRange : DomainError {
    explicit ModulusOutOfRange(const std::string& what) : DomainError(what) {}
};

struct RegimeViolation : DomainError {
    explicit RegimeViolation(const std::string& what) : DomainError(what) {}
};

struct OutsidePhysicalRegion : DomainError {
    explicit OutsidePhysicalRegion(const std::string& what) : DomainError(what) {}
};

struct SingularFibre : DomainError {
    explicit SingularFibre(const std::string& what) : DomainError(what) {}
};

struct DegenerateCycle : DomainError {
    explicit DegenerateCycle(const std::string& what) : DomainError(what) {}
};

struct OnSeparatrix : DomainError {
    explicit OnSeparatrix(const std::string& what) : DomainError(what) {}
};

// Numeric failures: the quantity exists but could not be computed reliably.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureFailure : NumericError {
    explicit QuadratureFailure(const std::string& what) : NumericError(what) {}
};

struct IllConditionedFit : NumericError {
    explicit IllConditionedFit(const std::string& what) : NumericError(what) {}
};

struct NonInvertibleLinearPart : NumericError {
    explicit NonInvertibleLinearPart(const std::string& what) : NumericError(what) {}
};

struct NoMatchingPolygon : NumericError {
    explicit NoMatchingPolygon(const std::string& what) : NumericError(what) {}
};

}  // namespace semitoric
