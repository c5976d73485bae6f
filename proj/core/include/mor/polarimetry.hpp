#pragma once

#include "mor/doppler.hpp"
#include "mor/params.hpp"
#include "mor/susceptibility.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mor {

struct MediumConfig
{
    double alpha_l = 1.0; ///< resonant absorption depth

    void validate() const;

    bool operator==(const MediumConfig&) const = default;
};

/// Uniform probe-detuning grid; steps == 1 evaluates delta_min only.
struct DetuningGrid
{
    double delta_min = 0.0;
    double delta_max = 0.0;
    std::size_t steps = 2;

    void validate() const;
    double at(std::size_t i) const;

    bool operator==(const DetuningGrid&) const = default;
};

struct EvaluationOptions
{
    ChiMethod method = ChiMethod::closed_form;
    double probe_eps = kDefaultProbeEps;

    bool operator==(const EvaluationOptions&) const = default;
};

struct SpectrumRecord
{
    double delta = 0.0;
    Complex chi_plus;
    Complex chi_minus;
    double theta_rad = 0.0;
    double t_y = 0.0;
};

struct Transmission
{
    double value = 0.0;
    bool gain_warning = false; ///< some Im chi < -1e-9; value may exceed 1
};

struct Enhancement
{
    double value = 1.0;
    bool undefined_baseline = false; ///< control-off T_y <= 1e-300; value is +inf
    double t_y_on = 0.0;
    double t_y_off = 0.0;
};

struct SwitchMetrics
{
    double peak_ty = 0.0;
    double delta_at_peak = 0.0;
    double extinction_off = 0.0; ///< control-off T_y at delta_at_peak
};

/// theta = (alpha_l / 4) Re(chi- - chi+), consistent with T_y = sin^2(theta) without absorption.
double rotation_angle(const SusceptibilityPair& chis, const MediumConfig& medium);

/// T_y = |exp(i alpha_l chi+ / 2) - exp(i alpha_l chi- / 2)|^2 / 4 behind a crossed analyzer.
Transmission transmission_ty(const SusceptibilityPair& chis, const MediumConfig& medium);

/// chi+- at the parameter point, Doppler-averaged when a config is given.
SusceptibilityPair medium_response(const SystemParams& p, const std::optional<DopplerConfig>& doppler,
                                   const EvaluationOptions& options = {});

/// One record per grid point, ascending delta. Lower-level errors come back as SpectrumPointError.
std::vector<SpectrumRecord> spectrum(const SystemParams& p, const MediumConfig& medium,
                                     const std::optional<DopplerConfig>& doppler, const DetuningGrid& grid,
                                     const EvaluationOptions& options = {});

/// T_y with the control as given over T_y with G1 = G2 = 0, both at probe detuning delta.
Enhancement enhancement_factor(const SystemParams& p, const MediumConfig& medium,
                               const std::optional<DopplerConfig>& doppler, double delta,
                               const EvaluationOptions& options = {});

/// Peak control-on T_y over the grid (smallest delta wins ties) and the control-off T_y there.
SwitchMetrics switch_metrics(const SystemParams& p, const MediumConfig& medium,
                             const std::optional<DopplerConfig>& doppler, const DetuningGrid& grid,
                             const EvaluationOptions& options = {});

SystemParams control_off(const SystemParams& p);

} // namespace mor
