#include "mor/doppler.hpp"

#include "mor/errors.hpp"
#include "mor/faddeeva.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace mor {

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
constexpr int kMaxSimpsonDepth = 40;
constexpr long kMaxInitialSamples = (1L << 21) + 1;

SusceptibilityPair operator+(const SusceptibilityPair& a, const SusceptibilityPair& b)
{
    return {a.chi_plus + b.chi_plus, a.chi_minus + b.chi_minus};
}

SusceptibilityPair operator-(const SusceptibilityPair& a, const SusceptibilityPair& b)
{
    return {a.chi_plus - b.chi_plus, a.chi_minus - b.chi_minus};
}

SusceptibilityPair operator*(double s, const SusceptibilityPair& a)
{
    return {s * a.chi_plus, s * a.chi_minus};
}

double max_abs(const SusceptibilityPair& a)
{
    return std::max(std::abs(a.chi_plus), std::abs(a.chi_minus));
}

class SimpsonIntegrator
{
public:
    explicit SimpsonIntegrator(const std::function<SusceptibilityPair(double)>& f) : f_(f) {}

    SusceptibilityPair panel(double a, double b, double tol)
    {
        const SusceptibilityPair fa = f_(a);
        const SusceptibilityPair fm = f_(0.5 * (a + b));
        const SusceptibilityPair fb = f_(b);
        const SusceptibilityPair whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
        return refine(a, b, fa, fm, fb, whole, tol, kMaxSimpsonDepth);
    }

private:
    SusceptibilityPair refine(double a, double b, const SusceptibilityPair& fa, const SusceptibilityPair& fm,
                              const SusceptibilityPair& fb, const SusceptibilityPair& whole, double tol,
                              int depth)
    {
        const double m = 0.5 * (a + b);
        const SusceptibilityPair flm = f_(0.5 * (a + m));
        const SusceptibilityPair frm = f_(0.5 * (m + b));
        const SusceptibilityPair left = ((m - a) / 6.0) * (fa + 4.0 * flm + fm);
        const SusceptibilityPair right = ((b - m) / 6.0) * (fm + 4.0 * frm + fb);
        const SusceptibilityPair correction = left + right - whole;
        if (depth <= 0 || max_abs(correction) <= 15.0 * tol)
            return left + right + (1.0 / 15.0) * correction;
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
               + refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }

    const std::function<SusceptibilityPair(double)>& f_;
};

SusceptibilityPair simpson_average(const VelocityIntegrand& integrand, const DopplerConfig& config,
                                   double narrowest_feature)
{
    const double width = config.width;
    const double half_range = kSimpsonRangeWidths * width;
    const double spacing = 0.5 * narrowest_feature;

    long samples = static_cast<long>(std::ceil(2.0 * half_range / spacing)) + 1;
    samples = std::clamp<long>(samples, config.quadrature_nodes, kMaxInitialSamples);
    if (samples % 2 == 0)
        ++samples;
    const long panels = (samples - 1) / 2;

    const std::function<SusceptibilityPair(double)> weighted = [&](double kv) {
        const double x = kv / width;
        return (kInvSqrtPi / width * std::exp(-x * x)) * integrand(kv);
    };
    SimpsonIntegrator simpson(weighted);

    const double panel_width = 2.0 * half_range / static_cast<double>(panels);
    const double panel_tol = kSimpsonTolerance / static_cast<double>(panels);
    SusceptibilityPair total{};
    for (long k = 0; k < panels; ++k) {
        const double a = -half_range + static_cast<double>(k) * panel_width;
        const double b = k + 1 == panels ? half_range : a + panel_width;
        total = total + simpson.panel(a, b, panel_tol);
    }
    return total;
}

SusceptibilityPair gauss_hermite_sum(const VelocityIntegrand& integrand, double width, int n)
{
    const GaussHermiteRule& rule = gauss_hermite_rule(n);
    SusceptibilityPair total{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        total = total + (rule.weights[i] * kInvSqrtPi) * integrand(width * rule.nodes[i]);
    return total;
}

SusceptibilityPair gauss_hermite_average(const VelocityIntegrand& integrand, const DopplerConfig& config)
{
    const int n = config.quadrature_nodes;
    const SusceptibilityPair coarse = gauss_hermite_sum(integrand, config.width, n);
    const SusceptibilityPair fine = gauss_hermite_sum(integrand, config.width, 2 * n);
    if (max_abs(fine - coarse) <= kGaussHermiteTolerance)
        return fine;

    const SusceptibilityPair finest = gauss_hermite_sum(integrand, config.width, 4 * n);
    const double change = max_abs(finest - fine);
    if (change <= kGaussHermiteTolerance)
        return finest;
    throw QuadratureNotConverged("Gauss-Hermite average did not converge at D = " + std::to_string(config.width)
                                 + " with up to " + std::to_string(4 * n) + " nodes (last change "
                                 + std::to_string(change) + ")");
}

double narrowest_linewidth(const SystemParams& p)
{
    return std::min({p.gamma1, p.gamma2, p.Gamma1, p.Gamma2});
}

} // namespace

void DopplerConfig::validate() const
{
    if (!std::isfinite(width) || width < 0.0)
        throw InvalidArgument("Doppler width must be finite and >= 0");
    if (method == QuadratureMethod::adaptive_simpson) {
        if (quadrature_nodes < 11 || quadrature_nodes % 2 == 0)
            throw InvalidArgument("adaptive Simpson needs an odd node count >= 11, got "
                                  + std::to_string(quadrature_nodes));
    } else if (quadrature_nodes < 1) {
        throw InvalidArgument("Gauss-Hermite needs at least one node");
    }
}

SystemParams shifted_params(const SystemParams& p, double kv, BeamGeometry geometry)
{
    SystemParams moving = p;
    moving.delta = p.delta - kv;
    moving.Delta = geometry == BeamGeometry::counter ? p.Delta + kv : p.Delta - kv;
    return moving;
}

SusceptibilityPair velocity_average(const VelocityIntegrand& integrand, const DopplerConfig& config,
                                    double narrowest_feature)
{
    config.validate();
    if (config.width == 0.0)
        return integrand(0.0);
    if (!(narrowest_feature > 0.0))
        throw InvalidArgument("narrowest feature width must be positive");
    return config.method == QuadratureMethod::gauss_hermite
               ? gauss_hermite_average(integrand, config)
               : simpson_average(integrand, config, narrowest_feature);
}

SusceptibilityPair doppler_average(const SystemParams& p, const DopplerConfig& config, ChiMethod method,
                                   double probe_eps)
{
    p.validate();
    if (method == ChiMethod::closed_form && p.G2 != Complex{})
        throw GeometryUnsupported("closed-form Doppler average requires G2 = 0 (pure sigma- control)");
    const VelocityIntegrand integrand = [&](double kv) {
        return evaluate_chi(shifted_params(p, kv, config.geometry), method, probe_eps);
    };
    return velocity_average(integrand, config, narrowest_linewidth(p));
}

Complex voigt_chi_minus(const SystemParams& p, double width)
{
    const double gamma = p.gamma2;
    const Complex z((p.Omega - p.delta) / width, gamma / width);
    return Complex(0.0, gamma * std::sqrt(std::numbers::pi) / width) * faddeeva_w(z);
}

double distribution_norm(const DopplerConfig& config)
{
    const VelocityIntegrand one = [](double) { return SusceptibilityPair{1.0, 1.0}; };
    return velocity_average(one, config).chi_plus.real();
}

const GaussHermiteRule& gauss_hermite_rule(int n)
{
    if (n < 1)
        throw InvalidArgument("Gauss-Hermite rule needs n >= 1");

    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (slot)
        return *slot;

    // Jacobi matrix of the physicists' Hermite recurrence: zero diagonal, off-diagonal sqrt(k/2).
    Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k)
        sub(k - 1) = std::sqrt(0.5 * k);

    auto rule = std::make_unique<GaussHermiteRule>();
    rule->nodes.resize(n);
    rule->weights.resize(n);
    if (n == 1) {
        rule->nodes[0] = 0.0;
        rule->weights[0] = std::sqrt(std::numbers::pi);
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diagonal, sub, Eigen::ComputeEigenvectors);
        for (int i = 0; i < n; ++i) {
            rule->nodes[i] = solver.eigenvalues()(i);
            const double v0 = solver.eigenvectors()(0, i);
            rule->weights[i] = std::sqrt(std::numbers::pi) * v0 * v0;
        }
    }
    slot = std::move(rule);
    return *slot;
}

} // namespace mor
