#include "mor/susceptibility.hpp"

#include "mor/errors.hpp"
#include "mor/lindblad.hpp"

#include <string>

namespace mor {

namespace {
constexpr Complex I(0.0, 1.0);
}

Complex chi_minus_closed(const SystemParams& p)
{
    const double gamma = p.gamma2;
    return I * gamma / (gamma + I * (p.delta - p.Omega));
}

Complex chi_plus_closed(const SystemParams& p)
{
    const double gamma = p.gamma1;
    if (p.G1 == Complex{})
        return I * gamma / (gamma + I * (p.delta + p.Omega));
    const Complex two_photon = (p.Gamma1 + p.Gamma2) + I * (p.Delta + p.delta);
    const Complex one_photon = gamma + I * (p.delta + p.Omega);
    return I * gamma * two_photon / (std::norm(p.G1) + one_photon * two_photon);
}

SusceptibilityPair chi_closed(const SystemParams& p)
{
    if (p.G2 != Complex{})
        throw GeometryUnsupported("closed-form susceptibilities require G2 = 0 (pure sigma- control)");
    return {chi_plus_closed(p), chi_minus_closed(p)};
}

SusceptibilityPair chi_from_state(const DensityMatrix& rho, const SystemParams& p)
{
    return {p.gamma1 * rho(Level::one, Level::g) / p.g1, p.gamma2 * rho(Level::two, Level::g) / p.g2};
}

SusceptibilityPair chi_numeric(const SystemParams& p, double probe_eps)
{
    if (!(probe_eps >= 1e-6 && probe_eps <= 1e-2))
        throw InvalidArgument("probe_eps must lie in [1e-6, 1e-2], got " + std::to_string(probe_eps));
    SystemParams weak = p;
    weak.g1 = probe_eps;
    weak.g2 = probe_eps;
    return chi_from_state(steady_state(weak), weak);
}

SusceptibilityPair evaluate_chi(const SystemParams& p, ChiMethod method, double probe_eps)
{
    return method == ChiMethod::closed_form ? chi_closed(p) : chi_numeric(p, probe_eps);
}

} // namespace mor
