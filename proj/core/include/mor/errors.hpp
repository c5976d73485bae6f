#pragma once

#include <stdexcept>
#include <string>

namespace mor {

/// Base class of every error raised by the simulator core.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A SystemParams / DopplerConfig / MediumConfig value violates its invariants.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// The trace-constrained steady-state system is numerically rank deficient.
class SingularSystem : public Error
{
public:
    SingularSystem(const std::string& what, double condition)
        : Error(what), condition_(condition)
    {
    }

    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

/// RK4 integration diverged (some |rho_ij| exceeded 10).
class StepTooLarge : public Error
{
public:
    using Error::Error;
};

/// Closed-form susceptibilities were requested for a control field with a sigma+ component.
class GeometryUnsupported : public Error
{
public:
    using Error::Error;
};

class QuadratureNotConverged : public Error
{
public:
    using Error::Error;
};

/// Wraps a failure at one probe detuning of a spectrum scan.
class SpectrumPointError : public Error
{
public:
    SpectrumPointError(double delta, const std::string& cause)
        : Error("at delta = " + std::to_string(delta) + ": " + cause), delta_(delta)
    {
    }

    double delta() const noexcept { return delta_; }

private:
    double delta_;
};

} // namespace mor
