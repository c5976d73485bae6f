#include "mor/polarimetry.hpp"

#include "mor/errors.hpp"
#include "mor/parallel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mor {

namespace {

constexpr Complex I(0.0, 1.0);
constexpr double kGainThreshold = -1e-9;
constexpr double kBaselineFloor = 1e-300;

} // namespace

void MediumConfig::validate() const
{
    if (!std::isfinite(alpha_l) || alpha_l < 0.0)
        throw InvalidArgument("alpha_l must be finite and >= 0");
}

void DetuningGrid::validate() const
{
    if (!std::isfinite(delta_min) || !std::isfinite(delta_max))
        throw InvalidArgument("grid bounds must be finite");
    if (steps < 1)
        throw InvalidArgument("grid needs at least one point");
    if (steps > 1 && delta_max < delta_min)
        throw InvalidArgument("grid delta_max must be >= delta_min");
}

double DetuningGrid::at(std::size_t i) const
{
    if (steps == 1 || i == 0)
        return delta_min;
    if (i + 1 == steps)
        return delta_max;
    return delta_min + (delta_max - delta_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

double rotation_angle(const SusceptibilityPair& chis, const MediumConfig& medium)
{
    return 0.25 * medium.alpha_l * (chis.chi_minus - chis.chi_plus).real();
}

Transmission transmission_ty(const SusceptibilityPair& chis, const MediumConfig& medium)
{
    // e^{ia} - e^{ib} = 2i e^{i(a+b)/2} sin((a-b)/2), free of cancellation when a ~ b
    const double quarter = 0.25 * medium.alpha_l;
    const double attenuation = std::exp(-2.0 * quarter * (chis.chi_plus + chis.chi_minus).imag());
    const Complex s = std::sin(quarter * (chis.chi_minus - chis.chi_plus));
    return {attenuation * std::norm(s),
            chis.chi_plus.imag() < kGainThreshold || chis.chi_minus.imag() < kGainThreshold};
}

SusceptibilityPair medium_response(const SystemParams& p, const std::optional<DopplerConfig>& doppler,
                                   const EvaluationOptions& options)
{
    if (doppler)
        return doppler_average(p, *doppler, options.method, options.probe_eps);
    p.validate();
    return evaluate_chi(p, options.method, options.probe_eps);
}

std::vector<SpectrumRecord> spectrum(const SystemParams& p, const MediumConfig& medium,
                                     const std::optional<DopplerConfig>& doppler, const DetuningGrid& grid,
                                     const EvaluationOptions& options)
{
    medium.validate();
    grid.validate();
    if (doppler)
        doppler->validate();

    std::vector<SpectrumRecord> records(grid.steps);
    parallel_for(grid.steps, [&](std::size_t i) {
        SystemParams point = p;
        point.delta = grid.at(i);
        try {
            const SusceptibilityPair chis = medium_response(point, doppler, options);
            records[i] = {point.delta, chis.chi_plus, chis.chi_minus, rotation_angle(chis, medium),
                          transmission_ty(chis, medium).value};
        } catch (const Error& e) {
            throw SpectrumPointError(point.delta, e.what());
        }
    });
    return records;
}

SystemParams control_off(const SystemParams& p)
{
    SystemParams off = p;
    off.G1 = 0.0;
    off.G2 = 0.0;
    return off;
}

Enhancement enhancement_factor(const SystemParams& p, const MediumConfig& medium,
                               const std::optional<DopplerConfig>& doppler, double delta,
                               const EvaluationOptions& options)
{
    medium.validate();
    SystemParams on = p;
    on.delta = delta;
    const SystemParams off = control_off(on);

    Enhancement result;
    result.t_y_on = transmission_ty(medium_response(on, doppler, options), medium).value;
    result.t_y_off = on == off ? result.t_y_on
                               : transmission_ty(medium_response(off, doppler, options), medium).value;
    if (!(result.t_y_off > kBaselineFloor)) {
        result.undefined_baseline = true;
        result.value = std::numeric_limits<double>::infinity();
        return result;
    }
    result.value = result.t_y_on / result.t_y_off;
    return result;
}

SwitchMetrics switch_metrics(const SystemParams& p, const MediumConfig& medium,
                             const std::optional<DopplerConfig>& doppler, const DetuningGrid& grid,
                             const EvaluationOptions& options)
{
    const std::vector<SpectrumRecord> on = spectrum(p, medium, doppler, grid, options);
    std::size_t best = 0;
    for (std::size_t i = 1; i < on.size(); ++i)
        if (on[i].t_y > on[best].t_y)
            best = i;

    SwitchMetrics metrics;
    metrics.peak_ty = on[best].t_y;
    metrics.delta_at_peak = on[best].delta;

    SystemParams on_at_peak = p;
    on_at_peak.delta = metrics.delta_at_peak;
    const SystemParams off = control_off(on_at_peak);
    metrics.extinction_off = off == on_at_peak
                                 ? metrics.peak_ty
                                 : transmission_ty(medium_response(off, doppler, options), medium).value;
    return metrics;
}

} // namespace mor
