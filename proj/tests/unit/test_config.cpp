#include "unit/random_params.hpp"

#include "app/config.hpp"

#include <doctest.h>

#include <string>

using morsim::ConfigError;

namespace {

constexpr const char* kGrid = "delta_min = -100\ndelta_max = 100\nsteps = 201\n";

ConfigError::Kind error_kind(const std::string& text)
{
    try {
        morsim::parse_config(text);
    } catch (const ConfigError& e) {
        return e.kind();
    }
    FAIL("expected a ConfigError");
    return ConfigError::Kind::io;
}

} // namespace

TEST_CASE("defaults apply to absent keys")
{
    const morsim::RunConfig config = morsim::parse_config(kGrid);
    CHECK(config.params.gamma1 == 1.0);
    CHECK(config.params.Gamma2 == 1.0);
    CHECK(config.params.Omega == 0.0);
    CHECK(config.params.g1 == mor::Complex(1e-4));
    CHECK(config.params.G1 == mor::Complex(0.0));
    CHECK(config.medium.alpha_l == 1.0);
    CHECK_FALSE(config.doppler.has_value());
    CHECK(config.evaluation.method == mor::ChiMethod::closed_form);
    CHECK(config.format == morsim::OutputFormat::csv);
    CHECK(config.grid.steps == 201);
}

TEST_CASE("grid keys are mandatory")
{
    try {
        morsim::parse_config("Omega = 50\ndelta_min = -1\nsteps = 3\n");
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.kind() == ConfigError::Kind::missing_key);
        CHECK(e.key() == "grid");
    }
}

TEST_CASE("a full configuration")
{
    const morsim::RunConfig config = morsim::parse_config(
        "# scan\nOmega = 50\nG1 = 100   # control\nalpha_l = 300\ndoppler_width = 100\n"
        "doppler_geometry = co\ndoppler_method = gauss-hermite\ndoppler_nodes = 64\n"
        "g2 = (0.001, -0.002)\nmode = numeric\nprobe_eps = 1e-5\nformat = json\noutput = out.json\n"
        + std::string(kGrid));
    CHECK(config.params.Omega == 50.0);
    CHECK(config.params.G1 == mor::Complex(100.0));
    CHECK(config.params.g2 == mor::Complex(0.001, -0.002));
    CHECK(config.medium.alpha_l == 300.0);
    REQUIRE(config.doppler.has_value());
    CHECK(config.doppler->width == 100.0);
    CHECK(config.doppler->geometry == mor::BeamGeometry::co);
    CHECK(config.doppler->method == mor::QuadratureMethod::gauss_hermite);
    CHECK(config.doppler->quadrature_nodes == 64);
    CHECK(config.evaluation.method == mor::ChiMethod::numeric);
    CHECK(config.evaluation.probe_eps == 1e-5);
    CHECK(config.format == morsim::OutputFormat::json);
    CHECK(config.output_path == "out.json");
}

TEST_CASE("malformed numbers report the line")
{
    try {
        morsim::parse_config("delta_min = -1\nOmega = fifty\n");
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.kind() == ConfigError::Kind::parse);
        CHECK(e.line() == 2);
        CHECK(e.key() == "Omega");
    }
}

TEST_CASE("rejected inputs")
{
    CHECK(error_kind(std::string(kGrid) + "omega = 1\n") == ConfigError::Kind::unknown_key);
    CHECK(error_kind(std::string(kGrid) + "Omega = 1\nOmega = 2\n") == ConfigError::Kind::parse);
    CHECK(error_kind(std::string(kGrid) + "just words\n") == ConfigError::Kind::parse);
    CHECK(error_kind(std::string(kGrid) + "Omega =\n") == ConfigError::Kind::parse);
    CHECK(error_kind(std::string(kGrid) + "Omega = 1 2\n") == ConfigError::Kind::parse);
    CHECK(error_kind(std::string(kGrid) + "mode = exact\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind(std::string(kGrid) + "gamma1 = 0\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind(std::string(kGrid) + "alpha_l = -1\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind(std::string(kGrid) + "probe_eps = 0.5\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind(std::string(kGrid) + "doppler_nodes = 10\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind("delta_min = 0\ndelta_max = 1\nsteps = 1\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind("delta_min = 1\ndelta_max = 0\nsteps = 5\n") == ConfigError::Kind::invalid_value);
    CHECK(error_kind("delta_min = 0\ndelta_max = 1\nsteps = 20000000\n") == ConfigError::Kind::invalid_value);
}

TEST_CASE("missing files are io errors")
{
    try {
        morsim::read_text_file("/nonexistent/morsim.cfg");
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.kind() == ConfigError::Kind::io);
    }
}

TEST_CASE("shortest formatting round-trips")
{
    CHECK(morsim::format_shortest(0.1) == "0.1");
    CHECK(morsim::format_shortest(-100.0) == "-100");
    testing::Rng rng(41);
    for (int n = 0; n < 1000; ++n) {
        const double x = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-12, 6));
        CHECK(std::stod(morsim::format_shortest(x)) == x);
    }
}

TEST_CASE("property: serialize then parse is the identity")
{
    testing::Rng rng(42);
    for (int n = 0; n < 300; ++n) {
        morsim::RunConfig config;
        config.params = rng.any_params();
        config.medium.alpha_l = rng.uniform(0.0, 500.0);
        if (n % 2 == 0) {
            mor::DopplerConfig doppler;
            doppler.width = rng.uniform(0.0, 300.0);
            doppler.geometry = n % 4 == 0 ? mor::BeamGeometry::co : mor::BeamGeometry::counter;
            doppler.method = n % 3 == 0 ? mor::QuadratureMethod::gauss_hermite : mor::QuadratureMethod::adaptive_simpson;
            doppler.quadrature_nodes = 2 * static_cast<int>(rng.uniform(6, 200)) + 1;
            config.doppler = doppler;
        }
        const double lo = rng.uniform(-200.0, 0.0);
        config.grid = {lo, lo + rng.uniform(0.0, 400.0), 2 + static_cast<std::size_t>(rng.uniform(0, 5000))};
        config.evaluation.method = n % 5 == 0 ? mor::ChiMethod::numeric : mor::ChiMethod::closed_form;
        config.evaluation.probe_eps = rng.uniform(1e-6, 1e-2);
        config.format = n % 2 == 0 ? morsim::OutputFormat::json : morsim::OutputFormat::csv;
        config.output_path = n % 3 == 0 ? "" : "run_" + std::to_string(n) + ".csv";

        const std::string text = morsim::serialize_config(config);
        CAPTURE(text);
        CHECK(morsim::parse_config(text) == config);
    }
}
