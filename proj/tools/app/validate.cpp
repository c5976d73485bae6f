#include "app/validate.hpp"

#include <mor/doppler.hpp>
#include <mor/errors.hpp>
#include <mor/lindblad.hpp>
#include <mor/polarimetry.hpp>
#include <mor/susceptibility.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace morsim {

namespace {

using mor::Complex;

double relative_error(Complex value, Complex reference)
{
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string sci(double v)
{
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

class Sampler
{
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    Complex complex(double magnitude) { return std::polar(uniform(0.0, magnitude), uniform(-std::numbers::pi, std::numbers::pi)); }

    /// rates = 1, G2 = 0, detunings in [-200, 200], Omega in [0, 100], G1 in [0, 100]
    mor::SystemParams sigma_minus_point()
    {
        mor::SystemParams p;
        p.delta = uniform(-200.0, 200.0);
        p.Delta = uniform(-200.0, 200.0);
        p.Omega = uniform(0.0, 100.0);
        p.G1 = uniform(0.0, 100.0);
        return p;
    }

    /// Any valid point with magnitudes in [0, 100] and rates in (0.1, 100].
    mor::SystemParams general_point()
    {
        mor::SystemParams p;
        p.gamma1 = uniform(0.1, 100.0);
        p.gamma2 = uniform(0.1, 100.0);
        p.Gamma1 = uniform(0.1, 100.0);
        p.Gamma2 = uniform(0.1, 100.0);
        p.Omega = uniform(-100.0, 100.0);
        p.delta = uniform(-100.0, 100.0);
        p.Delta = uniform(-100.0, 100.0);
        p.g1 = complex(100.0);
        p.g2 = complex(100.0);
        p.G1 = complex(100.0);
        p.G2 = complex(100.0);
        return p;
    }

    mor::Matrix4c hermitian_state()
    {
        mor::Matrix4c a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                a(i, j) = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        mor::Matrix4c rho = a * a.adjoint();
        return rho / rho.trace();
    }

private:
    std::mt19937_64 rng_;
};

CheckResult run_check(const std::string& name, const std::function<std::string()>& body)
{
    try {
        const std::string failure = body();
        return {name, failure.empty(), failure};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

mor::Matrix4c hamiltonian(const mor::SystemParams& p, bool flip)
{
    const mor::Matrix4c h = mor::build_hamiltonian(p);
    if (!flip)
        return h;
    mor::Matrix4c diagonal = mor::Matrix4c::Zero();
    diagonal.diagonal() = h.diagonal();
    return 2.0 * diagonal - h;
}

} // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options)
{
    std::vector<CheckResult> checks;
    Sampler sampler(options.seed);

    checks.push_back(run_check("closed-form vs numeric steady state", [&]() -> std::string {
        double worst = 0.0;
        for (int n = 0; n < 100; ++n) {
            mor::SystemParams p = sampler.sigma_minus_point();
            p.g1 = mor::kDefaultProbeEps;
            p.g2 = mor::kDefaultProbeEps;
            const mor::Liouvillian l = mor::build_liouvillian(p, hamiltonian(p, options.flip_hamiltonian_sign));
            const mor::SusceptibilityPair numeric = mor::chi_from_state(mor::steady_state(l), p);
            worst = std::max({worst, relative_error(numeric.chi_plus, mor::chi_plus_closed(p)),
                              relative_error(numeric.chi_minus, mor::chi_minus_closed(p))});
        }
        return worst <= 1e-6 ? "" : "worst relative error " + sci(worst) + " > 1e-6";
    }));

    checks.push_back(run_check("RK4 time evolution vs steady state", [&]() -> std::string {
        mor::SystemParams p;
        p.Omega = 5.0;
        p.g1 = 0.5;
        p.g2 = 0.5;
        p.G1 = 2.0;
        const mor::Liouvillian l = mor::build_liouvillian(p, hamiltonian(p, options.flip_hamiltonian_sign));
        const mor::DensityMatrix evolved =
            mor::time_evolve(l, mor::DensityMatrix::pure(mor::Level::g), 200.0, mor::recommended_time_step(p));
        const double distance = evolved.distance(mor::steady_state(l));
        return distance <= 1e-8 ? "" : "elementwise distance " + sci(distance) + " > 1e-8";
    }));

    checks.push_back(run_check("Voigt identity for the Doppler-averaged chi-", [&]() -> std::string {
        double worst = 0.0;
        mor::DopplerConfig doppler;
        for (double width : {0.5, 1.0, 10.0, 100.0}) {
            doppler.width = width;
            for (double offset : {0.0, 0.5, -0.5, 2.0, -2.0}) {
                mor::SystemParams p;
                p.Omega = 3.0;
                p.delta = p.Omega + offset * width;
                const Complex averaged = mor::doppler_average(p, doppler).chi_minus;
                worst = std::max(worst, std::abs(averaged - mor::voigt_chi_minus(p, width)));
            }
        }
        return worst <= 1e-8 ? "" : "worst deviation " + sci(worst) + " > 1e-8";
    }));

    checks.push_back(run_check("Gauss-Hermite quadrature convergence", [&]() -> std::string {
        mor::DopplerConfig doppler;
        doppler.width = 1.0;
        doppler.method = mor::QuadratureMethod::gauss_hermite;
        doppler.quadrature_nodes = options.doppler_nodes.value_or(201);
        mor::SystemParams p;
        p.Omega = 3.0;
        p.delta = 3.5;
        const double deviation = std::abs(mor::doppler_average(p, doppler).chi_minus - mor::voigt_chi_minus(p, 1.0));
        return deviation <= 1e-8 ? "" : "deviation from the Voigt value " + sci(deviation) + " > 1e-8";
    }));

    checks.push_back(run_check("steady-state physicality", [&]() -> std::string {
        for (int n = 0; n < 200; ++n) {
            const mor::SystemParams p = sampler.general_point();
            const mor::Liouvillian l = mor::build_liouvillian(p, hamiltonian(p, options.flip_hamiltonian_sign));
            const mor::DensityMatrix rho = mor::steady_state(l);
            if (!rho.is_physical())
                return "unphysical steady state at sample " + std::to_string(n);
            if (const double r = mor::residual(l, rho); r > 1e-10)
                return "residual " + sci(r) + " > 1e-10 at sample " + std::to_string(n);
        }
        return "";
    }));

    checks.push_back(run_check("Liouvillian trace preservation", [&]() -> std::string {
        double worst = 0.0;
        for (int n = 0; n < 100; ++n) {
            const mor::SystemParams p = sampler.general_point();
            const mor::Liouvillian l = mor::build_liouvillian(p, hamiltonian(p, options.flip_hamiltonian_sign));
            worst = std::max(worst, std::abs(l.trace_derivative(sampler.hermitian_state())));
        }
        return worst <= 1e-12 ? "" : "largest d(Tr rho)/dt " + sci(worst) + " > 1e-12";
    }));

    checks.push_back(run_check("crossed-polarizer transmission bounds and nulls", [&]() -> std::string {
        const mor::MediumConfig medium{300.0};
        for (int n = 0; n < 1000; ++n) {
            const mor::SusceptibilityPair chis{Complex(sampler.uniform(-2.0, 2.0), sampler.uniform(0.0, 2.0)),
                                               Complex(sampler.uniform(-2.0, 2.0), sampler.uniform(0.0, 2.0))};
            const double t = mor::transmission_ty(chis, medium).value;
            if (t < -1e-12 || t > 1.0 + 1e-12)
                return "T_y = " + sci(t) + " outside [0, 1]";
        }
        mor::SystemParams isotropic;
        for (double delta : {-50.0, -1.0, 0.0, 2.5, 80.0}) {
            isotropic.delta = delta;
            if (mor::transmission_ty(mor::chi_closed(isotropic), medium).value != 0.0)
                return "T_y != 0 for an isotropic medium";
        }
        return "";
    }));

    return checks;
}

bool report(const std::vector<CheckResult>& checks, std::ostream& out)
{
    bool all = true;
    for (const CheckResult& check : checks) {
        out << (check.passed ? "PASS  " : "FAIL  ") << check.name;
        if (!check.passed)
            out << ": " << check.detail;
        out << '\n';
        all = all && check.passed;
    }
    out << (all ? "all checks passed" : "validation FAILED") << '\n';
    return all;
}

} // namespace morsim
