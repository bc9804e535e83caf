#pragma once

#include <stdexcept>
#include <string>

namespace jetcurv {

// Failure category, used by the CLI to pick an exit code:
// invalid input data vs. a numerical breakdown inside an algorithm.
enum class ErrorKind { InvalidInput, Numerical };

class JetError : public std::runtime_error {
public:
    JetError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ShapeMismatch : JetError {
    explicit ShapeMismatch(const std::string& w) : JetError(ErrorKind::InvalidInput, "ShapeMismatch: " + w) {}
};

struct SymmetryViolation : JetError {
    explicit SymmetryViolation(const std::string& w) : JetError(ErrorKind::InvalidInput, "SymmetryViolation: " + w) {}
};

struct NotPositiveDefinite : JetError {
    explicit NotPositiveDefinite(const std::string& w) : JetError(ErrorKind::InvalidInput, "NotPositiveDefinite: " + w) {}
};

struct DimensionMismatch : JetError {
    explicit DimensionMismatch(const std::string& w) : JetError(ErrorKind::InvalidInput, "DimensionMismatch: " + w) {}
};

struct LengthMismatch : JetError {
    explicit LengthMismatch(const std::string& w) : JetError(ErrorKind::InvalidInput, "LengthMismatch: " + w) {}
};

struct DimensionTooSmall : JetError {
    explicit DimensionTooSmall(const std::string& w) : JetError(ErrorKind::InvalidInput, "DimensionTooSmall: " + w) {}
};

struct DegeneratePlane : JetError {
    explicit DegeneratePlane(const std::string& w) : JetError(ErrorKind::InvalidInput, "DegeneratePlane: " + w) {}
};

struct GridInvalid : JetError {
    explicit GridInvalid(const std::string& w) : JetError(ErrorKind::InvalidInput, "GridInvalid: " + w) {}
};

struct NormalFormRequired : JetError {
    explicit NormalFormRequired(const std::string& w) : JetError(ErrorKind::InvalidInput, "NormalFormRequired: " + w) {}
};

struct SingularJet : JetError {
    explicit SingularJet(const std::string& w) : JetError(ErrorKind::Numerical, "SingularJet: " + w) {}
};

struct GeneratorFailure : JetError {
    explicit GeneratorFailure(const std::string& w) : JetError(ErrorKind::Numerical, "GeneratorFailure: " + w) {}
};

struct LeftPositivityDomain : JetError {
    explicit LeftPositivityDomain(const std::string& w) : JetError(ErrorKind::Numerical, "LeftPositivityDomain: " + w) {}
};

// Internal consistency check failed (residual too large, solver breakdown).
struct NumericalFailure : JetError {
    explicit NumericalFailure(const std::string& w) : JetError(ErrorKind::Numerical, "NumericalFailure: " + w) {}
};

}  // namespace jetcurv
