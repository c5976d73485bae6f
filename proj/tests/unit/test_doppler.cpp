#include <mor/doppler.hpp>
#include <mor/errors.hpp>
#include <mor/faddeeva.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using mor::Complex;

namespace {

mor::DopplerConfig simpson(double width, mor::BeamGeometry geometry = mor::BeamGeometry::counter)
{
    mor::DopplerConfig d;
    d.width = width;
    d.geometry = geometry;
    d.method = mor::QuadratureMethod::adaptive_simpson;
    return d;
}

mor::DopplerConfig hermite(double width, int nodes = 201)
{
    mor::DopplerConfig d;
    d.width = width;
    d.method = mor::QuadratureMethod::gauss_hermite;
    d.quadrature_nodes = nodes;
    return d;
}

/// (peak - dip) / peak for the two highest local maxima of a sampled curve; 0 if fewer than two.
double dip_contrast(const std::vector<double>& y)
{
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] >= y[i + 1])
            maxima.push_back(i);
    if (maxima.size() < 2)
        return 0.0;
    std::sort(maxima.begin(), maxima.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });
    const std::size_t left = std::min(maxima[0], maxima[1]);
    const std::size_t right = std::max(maxima[0], maxima[1]);
    double dip = y[left];
    for (std::size_t i = left; i <= right; ++i)
        dip = std::min(dip, y[i]);
    const double peak = std::min(y[left], y[right]);
    return (peak - dip) / peak;
}

} // namespace

TEST_CASE("shifted params: zero velocity and the two geometries")
{
    mor::SystemParams p;
    p.Omega = 4.0;
    p.delta = 1.5;
    p.Delta = -2.0;
    p.G1 = 3.0;
    CHECK(mor::shifted_params(p, 0.0, mor::BeamGeometry::counter) == p);
    CHECK(mor::shifted_params(p, 0.0, mor::BeamGeometry::co) == p);

    const mor::SystemParams counter = mor::shifted_params(p, 7.0, mor::BeamGeometry::counter);
    CHECK(counter.delta + counter.Delta == p.delta + p.Delta);
    CHECK(counter.delta - counter.Omega == p.delta - p.Omega - 7.0);

    const mor::SystemParams co = mor::shifted_params(p, 7.0, mor::BeamGeometry::co);
    CHECK(co.delta + co.Delta == p.delta + p.Delta - 14.0);
    CHECK(co.Omega == p.Omega);
    CHECK(co.G1 == p.G1);
}

TEST_CASE("doppler average: zero width returns the homogeneous values exactly")
{
    mor::SystemParams p;
    p.Omega = 5.0;
    p.delta = 3.0;
    p.G1 = 20.0;
    CHECK(mor::doppler_average(p, simpson(0.0)) == mor::chi_closed(p));
    CHECK(mor::doppler_average(p, hermite(0.0)) == mor::chi_closed(p));
}

TEST_CASE("doppler average: unit width at line centre")
{
    mor::SystemParams p;
    p.Omega = 2.0;
    p.delta = 2.0;
    const Complex averaged = mor::doppler_average(p, simpson(1.0)).chi_minus;
    const double expected = std::sqrt(std::numbers::pi) * std::exp(1.0) * std::erfc(1.0);
    CHECK(std::abs(averaged.real()) <= 1e-10);
    CHECK(averaged.imag() == doctest::Approx(expected).epsilon(1e-9));
    CHECK(averaged.imag() == doctest::Approx(0.75787215614131).epsilon(1e-12));
}

TEST_CASE("doppler average: wide distribution at line centre")
{
    mor::SystemParams p;
    p.Omega = 2.0;
    p.delta = 2.0;
    const double width = 100.0;
    const double absorption = mor::doppler_average(p, simpson(width)).chi_minus.imag();
    // sqrt(pi)/100 * Re w(0.01i), w from scipy
    CHECK(absorption == doctest::Approx(std::sqrt(std::numbers::pi) / width * 0.9888154610463427).epsilon(1e-9));
    // The leading correction to the Voigt core is first order in gamma/D.
    const double asymptote = std::sqrt(std::numbers::pi) / width * (1.0 - 2.0 / (std::sqrt(std::numbers::pi) * width));
    CHECK(absorption == doctest::Approx(asymptote).epsilon(1e-4));
}

TEST_CASE("doppler average: Voigt identity across widths and detunings")
{
    for (double width : {0.5, 1.0, 10.0, 100.0}) {
        for (double offset : {0.0, 0.5, -0.5, 2.0, -2.0}) {
            mor::SystemParams p;
            p.Omega = 7.0;
            p.delta = p.Omega + offset * width;
            const Complex averaged = mor::doppler_average(p, simpson(width)).chi_minus;
            const Complex exact = Complex(0.0, std::sqrt(std::numbers::pi) / width)
                                  * mor::faddeeva_w({-offset, 1.0 / width});
            CAPTURE(width);
            CAPTURE(offset);
            CHECK(std::abs(averaged - exact) <= 1e-8);
            CHECK(std::abs(mor::voigt_chi_minus(p, width) - exact) <= 1e-15);
        }
    }
}

TEST_CASE("doppler average: the real part of the average is odd in the detuning")
{
    mor::SystemParams p;
    p.delta = 5.0;
    const Complex blue = mor::doppler_average(p, simpson(10.0)).chi_minus;
    p.delta = -5.0;
    const Complex red = mor::doppler_average(p, simpson(10.0)).chi_minus;
    CHECK(blue.real() > 0.0);
    CHECK(blue.real() == doctest::Approx(-red.real()).epsilon(1e-9));
    CHECK(blue.imag() == doctest::Approx(red.imag()).epsilon(1e-9));
}

TEST_CASE("gauss-hermite: rule moments")
{
    for (int n : {1, 2, 5, 40, 201}) {
        const mor::GaussHermiteRule& rule = mor::gauss_hermite_rule(n);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
        double m0 = 0.0;
        double m2 = 0.0;
        for (int i = 0; i < n; ++i) {
            m0 += rule.weights[i];
            m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
        }
        CHECK(m0 == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
        if (n >= 2)
            CHECK(m2 == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-12));
        CHECK(rule.nodes.front() == doctest::Approx(-rule.nodes.back()));
    }
    CHECK(&mor::gauss_hermite_rule(40) == &mor::gauss_hermite_rule(40));
}

TEST_CASE("gauss-hermite: converges when the line is not narrow against the Doppler width")
{
    for (double width : {0.1, 0.5, 1.0, 2.0}) {
        mor::SystemParams p;
        p.Omega = 1.0;
        p.delta = 1.0 + 0.7 * width;
        const Complex averaged = mor::doppler_average(p, hermite(width)).chi_minus;
        CAPTURE(width);
        CHECK(std::abs(averaged - mor::voigt_chi_minus(p, width)) <= 1e-8);
    }
}

TEST_CASE("gauss-hermite: reports failure once escalation is exhausted")
{
    mor::SystemParams p;
    CHECK_THROWS_AS(mor::doppler_average(p, hermite(100.0)), mor::QuadratureNotConverged);
    CHECK_THROWS_AS(mor::doppler_average(p, hermite(1.0, 3)), mor::QuadratureNotConverged);
}

TEST_CASE("distribution normalization")
{
    for (double width : {0.5, 10.0, 300.0}) {
        CHECK(mor::distribution_norm(simpson(width)) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(mor::distribution_norm(hermite(width, 11)) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("doppler config validation")
{
    mor::DopplerConfig d;
    CHECK_NOTHROW(d.validate());
    d.width = -1.0;
    CHECK_THROWS_AS(d.validate(), mor::InvalidArgument);
    d = {};
    d.quadrature_nodes = 12;
    CHECK_THROWS_AS(d.validate(), mor::InvalidArgument);
    d.quadrature_nodes = 9;
    CHECK_THROWS_AS(d.validate(), mor::InvalidArgument);
    d.method = mor::QuadratureMethod::gauss_hermite;
    d.quadrature_nodes = 3;
    CHECK_NOTHROW(d.validate());
    d.quadrature_nodes = 0;
    CHECK_THROWS_AS(d.validate(), mor::InvalidArgument);
}

TEST_CASE("doppler average: closed forms need a pure sigma- control")
{
    mor::SystemParams p;
    p.G2 = 1.0;
    CHECK_THROWS_AS(mor::doppler_average(p, simpson(1.0)), mor::GeometryUnsupported);
    CHECK_NOTHROW(mor::doppler_average(p, hermite(0.5), mor::ChiMethod::numeric));
}

TEST_CASE("doppler average: numeric and closed-form integrands agree")
{
    mor::SystemParams p;
    p.Omega = 2.0;
    p.delta = 1.0;
    p.G1 = 4.0;
    const mor::SusceptibilityPair closed = mor::doppler_average(p, hermite(0.5));
    const mor::SusceptibilityPair numeric = mor::doppler_average(p, hermite(0.5), mor::ChiMethod::numeric);
    CHECK(std::abs(closed.chi_plus - numeric.chi_plus) <= 1e-6 * std::abs(closed.chi_plus));
    CHECK(std::abs(closed.chi_minus - numeric.chi_minus) <= 1e-6 * std::abs(closed.chi_minus));
}

TEST_CASE("property: counter-propagation keeps the Autler-Townes dip, co-propagation washes it out")
{
    mor::SystemParams p;
    p.Omega = 50.0;
    p.G1 = 30.0;

    auto scan = [&](const mor::DopplerConfig* doppler) {
        std::vector<double> absorption;
        for (int k = -300; k <= 300; ++k) {
            mor::SystemParams point = p;
            point.delta = 0.5 * k;
            absorption.push_back(doppler ? mor::doppler_average(point, *doppler).chi_plus.imag()
                                         : mor::chi_plus_closed(point).imag());
        }
        return absorption;
    };

    const mor::DopplerConfig counter = simpson(100.0, mor::BeamGeometry::counter);
    const mor::DopplerConfig co = simpson(100.0, mor::BeamGeometry::co);
    const double homogeneous = dip_contrast(scan(nullptr));
    const double counter_contrast = dip_contrast(scan(&counter));
    const double co_contrast = dip_contrast(scan(&co));

    CHECK(homogeneous > 0.9);
    CHECK(counter_contrast >= 0.5 * homogeneous);
    CHECK(co_contrast * 5.0 <= counter_contrast);
}
