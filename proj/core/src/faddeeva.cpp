#include "mor/faddeeva.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

namespace mor {

namespace {

constexpr double kSwitchRadius = 8.0;
constexpr double kUpperLimit = 14.0; // exp(-t^2/4) < 1e-21 beyond
constexpr int kPanels = 56;
constexpr int kContinuedFractionTerms = 200;

Complex fourier_form(Complex z)
{
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const Complex iz(-z.imag(), z.real());
    auto integrand = [&](double t) { return std::exp(-0.25 * t * t + iz * t); };

    const double width = kUpperLimit / kPanels;
    Complex sum{};
    for (int k = 0; k < kPanels; ++k) {
        const double a = k * width;
        const double mid = a + 0.5 * width;
        const double half = 0.5 * width;
        Complex panel{};
        const auto& x = Rule::abscissa();
        const auto& w = Rule::weights();
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0.0) {
                panel += w[j] * integrand(mid);
            } else {
                panel += w[j] * (integrand(mid - half * x[j]) + integrand(mid + half * x[j]));
            }
        }
        sum += half * panel;
    }
    return sum / std::sqrt(std::numbers::pi);
}

Complex continued_fraction(Complex z)
{
    Complex tail{};
    for (int k = kContinuedFractionTerms; k >= 1; --k)
        tail = (0.5 * k) / (z - tail);
    return Complex(0.0, 1.0 / std::sqrt(std::numbers::pi)) / (z - tail);
}

} // namespace

Complex faddeeva_w(Complex z)
{
    if (z.imag() < 0.0)
        return 2.0 * std::exp(-z * z) - faddeeva_w(-z);
    return std::abs(z) < kSwitchRadius ? fourier_form(z) : continued_fraction(z);
}

} // namespace mor
