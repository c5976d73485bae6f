#pragma once

#include "mor/density_matrix.hpp"
#include "mor/params.hpp"

namespace mor {

/// Normalized probe susceptibilities; a bare resonant line has chi = i.
struct SusceptibilityPair
{
    Complex chi_plus;  ///< sigma+ probe component (|g> <-> |1>)
    Complex chi_minus; ///< sigma- probe component (|g> <-> |2>)

    bool operator==(const SusceptibilityPair&) const = default;
};

inline constexpr double kDefaultProbeEps = 1e-4;

enum class ChiMethod
{
    closed_form,
    numeric,
};

/// i gamma2 / (gamma2 + i(delta - Omega)). Independent of the control field.
Complex chi_minus_closed(const SystemParams& p);

/// i gamma1 (Gamma + i(Delta+delta)) / (|G1|^2 + (gamma1 + i(delta+Omega))(Gamma + i(Delta+delta))),
/// Gamma = Gamma1 + Gamma2. Valid for a pure sigma- control (G2 = 0).
Complex chi_plus_closed(const SystemParams& p);

/// Both closed forms. Throws GeometryUnsupported when G2 != 0.
SusceptibilityPair chi_closed(const SystemParams& p);

/// chi+ = gamma1 rho_1g / g1, chi- = gamma2 rho_2g / g2.
SusceptibilityPair chi_from_state(const DensityMatrix& rho, const SystemParams& p);

/// Weak-probe extraction from the numeric steady state with g1 = g2 = probe_eps.
/// probe_eps must lie in [1e-6, 1e-2]; SingularSystem propagates.
SusceptibilityPair chi_numeric(const SystemParams& p, double probe_eps = kDefaultProbeEps);

SusceptibilityPair evaluate_chi(const SystemParams& p, ChiMethod method, double probe_eps = kDefaultProbeEps);

} // namespace mor
