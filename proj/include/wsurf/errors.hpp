#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wsurf {

using cplx = std::complex<double>;

enum class ErrorCode {
    BranchCutViolation = 1,
    DomainError,
    ToleranceNotReached,
    EvaluationFailure,
    UnknownEquation,
    OutsideFixtureDomain,
    SingularPoint,
    PathPlanningFailure,
    StepSizeUnderflow,
    StencilOutsideDomain,
    EmptyMesh,
    IoFailure,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

std::string format_complex(cplx z);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class BranchCutViolation : public Error {
public:
    BranchCutViolation(std::string fn, cplx z)
        : Error(ErrorCode::BranchCutViolation, fn + ": argument " + format_complex(z) + " lies on the branch cut"),
          fn_(std::move(fn)), z_(z) {}
    const std::string& function() const noexcept { return fn_; }
    cplx point() const noexcept { return z_; }

private:
    std::string fn_;
    cplx z_;
};

/// Raised by adaptive quadrature when the error budget could not be met.
/// Carries the best estimate so callers can decide whether to accept it.
class ToleranceNotReached : public Error {
public:
    ToleranceNotReached(cplx best, double achieved)
        : Error(ErrorCode::ToleranceNotReached,
                "quadrature tolerance not reached (achieved error " + std::to_string(achieved) + ")"),
          best_(best), achieved_(achieved) {}
    cplx best_estimate() const noexcept { return best_; }
    double achieved_error() const noexcept { return achieved_; }

private:
    cplx best_;
    double achieved_;
};

class EvaluationFailure : public Error {
public:
    explicit EvaluationFailure(cplx z)
        : Error(ErrorCode::EvaluationFailure, "non-finite value at " + format_complex(z)), z_(z) {}
    cplx point() const noexcept { return z_; }

private:
    cplx z_;
};

class SingularPoint : public Error {
public:
    explicit SingularPoint(cplx z) : Error(ErrorCode::SingularPoint, "singular point " + format_complex(z)), z_(z) {}
    cplx point() const noexcept { return z_; }

private:
    cplx z_;
};

} // namespace wsurf
