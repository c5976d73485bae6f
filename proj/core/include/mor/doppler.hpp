#pragma once

#include "mor/params.hpp"
#include "mor/susceptibility.hpp"

#include <functional>
#include <vector>

namespace mor {

/// Control beam direction relative to the probe (probe propagates along +z).
enum class BeamGeometry
{
    counter,
    co,
};

enum class QuadratureMethod
{
    gauss_hermite,
    adaptive_simpson,
};

/**
 * Thermal averaging over a 1-D Maxwell distribution in kv,
 * f(kv) = exp(-(kv/D)^2) / (D sqrt(pi)), with equal probe and control wavenumbers.
 *
 * For adaptive_simpson, quadrature_nodes is the minimum number of initial samples on
 * [-8D, 8D] (odd, >= 11). For gauss_hermite it is the starting rule size N; the rule
 * is accepted once N and 2N (or 2N and 4N) agree to 1e-8.
 */
struct DopplerConfig
{
    double width = 100.0; ///< D = k u, units of gamma
    BeamGeometry geometry = BeamGeometry::counter;
    int quadrature_nodes = 201;
    QuadratureMethod method = QuadratureMethod::adaptive_simpson;

    void validate() const;

    bool operator==(const DopplerConfig&) const = default;
};

inline constexpr double kGaussHermiteTolerance = 1e-8;
inline constexpr double kSimpsonTolerance = 1e-10;
inline constexpr double kSimpsonRangeWidths = 8.0;

/// Parameters seen by an atom moving with Doppler shift kv: delta -> delta - kv, and
/// Delta -> Delta + kv (counter) or Delta - kv (co).
SystemParams shifted_params(const SystemParams& p, double kv, BeamGeometry geometry);

using VelocityIntegrand = std::function<SusceptibilityPair(double kv)>;

/// <F> = int f(kv) F(kv) d(kv). narrowest_feature bounds the initial Simpson sample spacing.
/// Width 0 returns F(0).
SusceptibilityPair velocity_average(const VelocityIntegrand& integrand, const DopplerConfig& config,
                                    double narrowest_feature = 1.0);

/// Doppler-averaged chi+-. Closed forms require G2 = 0 (GeometryUnsupported otherwise).
SusceptibilityPair doppler_average(const SystemParams& p, const DopplerConfig& config,
                                   ChiMethod method = ChiMethod::closed_form,
                                   double probe_eps = kDefaultProbeEps);

/// Exact thermal average of the closed-form chi-: i gamma2 (sqrt(pi)/D) w((Omega - delta + i gamma2)/D).
Complex voigt_chi_minus(const SystemParams& p, double width);

/// int f(kv) d(kv) under the configured quadrature; 1 up to quadrature error.
double distribution_norm(const DopplerConfig& config);

struct GaussHermiteRule
{
    std::vector<double> nodes;
    std::vector<double> weights; ///< for weight exp(-x^2); sum to sqrt(pi)
};

/// Golub-Welsch rule with n nodes. Rules are cached; the reference stays valid for the process lifetime.
const GaussHermiteRule& gauss_hermite_rule(int n);

} // namespace mor
