#include "mor/params.hpp"

#include "mor/errors.hpp"

#include <cmath>
#include <string>

namespace mor {

namespace {

void require_rate(double value, const char* name)
{
    if (!std::isfinite(value) || !(value > 0.0))
        throw InvalidArgument(std::string(name) + " must be a finite positive rate, got " + std::to_string(value));
}

void require_finite(double value, const char* name)
{
    if (!std::isfinite(value))
        throw InvalidArgument(std::string(name) + " must be finite");
}

void require_finite(Complex value, const char* name)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw InvalidArgument(std::string(name) + " must be finite");
}

} // namespace

void SystemParams::validate() const
{
    require_rate(gamma1, "gamma1");
    require_rate(gamma2, "gamma2");
    require_rate(Gamma1, "Gamma1");
    require_rate(Gamma2, "Gamma2");
    require_finite(Omega, "Omega");
    require_finite(delta, "delta");
    require_finite(Delta, "Delta");
    require_finite(g1, "g1");
    require_finite(g2, "g2");
    require_finite(G1, "G1");
    require_finite(G2, "G2");
}

} // namespace mor
