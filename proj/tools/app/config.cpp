#include "app/config.hpp"

#include <mor/errors.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

namespace morsim {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

ConfigError invalid(const KeyValue& entry, const std::string& why)
{
    return ConfigError(ConfigError::Kind::invalid_value, entry.line, entry.key, why);
}

bool parse_double(std::string_view text, double& out)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty() && std::isfinite(out);
}

std::size_t parse_count(const KeyValue& entry)
{
    const std::string_view text = trim(entry.value);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError(ConfigError::Kind::parse, entry.line, entry.key,
                          "expected a non-negative integer, got '" + entry.value + "'");
    return value;
}

int parse_int(const KeyValue& entry)
{
    const std::size_t value = parse_count(entry);
    if (value > 1'000'000'000)
        throw invalid(entry, "value too large");
    return static_cast<int>(value);
}

mor::BeamGeometry parse_geometry(const KeyValue& entry)
{
    if (entry.value == "counter")
        return mor::BeamGeometry::counter;
    if (entry.value == "co")
        return mor::BeamGeometry::co;
    throw invalid(entry, "expected 'counter' or 'co'");
}

mor::QuadratureMethod parse_method(const KeyValue& entry)
{
    if (entry.value == "gauss-hermite")
        return mor::QuadratureMethod::gauss_hermite;
    if (entry.value == "adaptive-simpson")
        return mor::QuadratureMethod::adaptive_simpson;
    throw invalid(entry, "expected 'gauss-hermite' or 'adaptive-simpson'");
}

std::string format_complex(mor::Complex z)
{
    if (z.imag() == 0.0)
        return format_shortest(z.real());
    return "(" + format_shortest(z.real()) + "," + format_shortest(z.imag()) + ")";
}

} // namespace

ConfigError::ConfigError(Kind kind, int line, std::string key, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + key + ": " + message
                                  : (key.empty() ? message : key + ": " + message)),
      kind_(kind), line_(line), key_(std::move(key))
{
}

std::vector<KeyValue> split_key_values(std::string_view text)
{
    std::vector<KeyValue> entries;
    std::set<std::string, std::less<>> seen;
    int line_number = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_number;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(ConfigError::Kind::parse, line_number, std::string(line), "expected 'key = value'");
        KeyValue entry{line_number, std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
        if (entry.key.empty())
            throw ConfigError(ConfigError::Kind::parse, line_number, "", "empty key");
        if (entry.value.empty())
            throw ConfigError(ConfigError::Kind::parse, line_number, entry.key, "empty value");
        if (!seen.insert(entry.key).second)
            throw ConfigError(ConfigError::Kind::parse, line_number, entry.key, "duplicate key");
        entries.push_back(std::move(entry));
    }
    return entries;
}

double parse_real(const KeyValue& entry)
{
    double value = 0.0;
    if (!parse_double(entry.value, value))
        throw ConfigError(ConfigError::Kind::parse, entry.line, entry.key,
                          "expected a finite real number, got '" + entry.value + "'");
    return value;
}

mor::Complex parse_complex(const KeyValue& entry)
{
    std::string_view text = entry.value;
    if (text.front() != '(')
        return parse_real(entry);
    const auto comma = text.find(',');
    if (text.back() != ')' || comma == std::string_view::npos)
        throw ConfigError(ConfigError::Kind::parse, entry.line, entry.key,
                          "expected a real number or '(re,im)', got '" + entry.value + "'");
    double re = 0.0;
    double im = 0.0;
    if (!parse_double(text.substr(1, comma - 1), re) || !parse_double(text.substr(comma + 1, text.size() - comma - 2), im))
        throw ConfigError(ConfigError::Kind::parse, entry.line, entry.key,
                          "expected a real number or '(re,im)', got '" + entry.value + "'");
    return {re, im};
}

RunConfig build_config(const std::vector<KeyValue>& entries)
{
    RunConfig config;
    mor::SystemParams& p = config.params;
    std::optional<double> delta_min;
    std::optional<double> delta_max;
    std::optional<std::size_t> steps;
    mor::DopplerConfig doppler;
    bool doppler_seen = false;

    for (const KeyValue& entry : entries) {
        const std::string& key = entry.key;
        if (key == "gamma1") p.gamma1 = parse_real(entry);
        else if (key == "gamma2") p.gamma2 = parse_real(entry);
        else if (key == "Gamma1") p.Gamma1 = parse_real(entry);
        else if (key == "Gamma2") p.Gamma2 = parse_real(entry);
        else if (key == "Omega") p.Omega = parse_real(entry);
        else if (key == "delta") p.delta = parse_real(entry);
        else if (key == "Delta") p.Delta = parse_real(entry);
        else if (key == "g1") p.g1 = parse_complex(entry);
        else if (key == "g2") p.g2 = parse_complex(entry);
        else if (key == "G1") p.G1 = parse_complex(entry);
        else if (key == "G2") p.G2 = parse_complex(entry);
        else if (key == "alpha_l") config.medium.alpha_l = parse_real(entry);
        else if (key == "probe_eps") config.evaluation.probe_eps = parse_real(entry);
        else if (key == "mode") {
            if (entry.value == "closed-form")
                config.evaluation.method = mor::ChiMethod::closed_form;
            else if (entry.value == "numeric")
                config.evaluation.method = mor::ChiMethod::numeric;
            else
                throw invalid(entry, "expected 'closed-form' or 'numeric'");
        }
        else if (key == "delta_min") delta_min = parse_real(entry);
        else if (key == "delta_max") delta_max = parse_real(entry);
        else if (key == "steps") {
            steps = parse_count(entry);
            if (*steps < 2 || *steps > kMaxGridSteps)
                throw invalid(entry, "steps must lie in [2, 10^7]");
        }
        else if (key == "doppler_width") { doppler.width = parse_real(entry); doppler_seen = true; }
        else if (key == "doppler_geometry") { doppler.geometry = parse_geometry(entry); doppler_seen = true; }
        else if (key == "doppler_method") { doppler.method = parse_method(entry); doppler_seen = true; }
        else if (key == "doppler_nodes") { doppler.quadrature_nodes = parse_int(entry); doppler_seen = true; }
        else if (key == "output") config.output_path = entry.value;
        else if (key == "format") {
            if (entry.value == "csv")
                config.format = OutputFormat::csv;
            else if (entry.value == "json")
                config.format = OutputFormat::json;
            else
                throw invalid(entry, "expected 'csv' or 'json'");
        }
        else
            throw ConfigError(ConfigError::Kind::unknown_key, entry.line, key, "unknown key");
    }

    if (!delta_min || !delta_max || !steps) {
        const char* missing = !delta_min ? "delta_min" : (!delta_max ? "delta_max" : "steps");
        throw ConfigError(ConfigError::Kind::missing_key, 0, "grid",
                          std::string("missing mandatory grid key '") + missing + "'");
    }
    config.grid = {*delta_min, *delta_max, *steps};
    if (doppler_seen)
        config.doppler = doppler;

    try {
        p.validate();
        config.medium.validate();
        config.grid.validate();
        if (config.doppler)
            config.doppler->validate();
    } catch (const mor::Error& e) {
        throw ConfigError(ConfigError::Kind::invalid_value, 0, "", e.what());
    }
    if (!(config.evaluation.probe_eps >= 1e-6 && config.evaluation.probe_eps <= 1e-2))
        throw ConfigError(ConfigError::Kind::invalid_value, 0, "probe_eps", "must lie in [1e-6, 1e-2]");
    return config;
}

RunConfig parse_config(std::string_view text)
{
    return build_config(split_key_values(text));
}

std::string serialize_config(const RunConfig& config)
{
    const mor::SystemParams& p = config.params;
    std::ostringstream out;
    out << "gamma1 = " << format_shortest(p.gamma1) << '\n'
        << "gamma2 = " << format_shortest(p.gamma2) << '\n'
        << "Gamma1 = " << format_shortest(p.Gamma1) << '\n'
        << "Gamma2 = " << format_shortest(p.Gamma2) << '\n'
        << "Omega = " << format_shortest(p.Omega) << '\n'
        << "delta = " << format_shortest(p.delta) << '\n'
        << "Delta = " << format_shortest(p.Delta) << '\n'
        << "g1 = " << format_complex(p.g1) << '\n'
        << "g2 = " << format_complex(p.g2) << '\n'
        << "G1 = " << format_complex(p.G1) << '\n'
        << "G2 = " << format_complex(p.G2) << '\n'
        << "alpha_l = " << format_shortest(config.medium.alpha_l) << '\n'
        << "mode = " << (config.evaluation.method == mor::ChiMethod::closed_form ? "closed-form" : "numeric") << '\n'
        << "probe_eps = " << format_shortest(config.evaluation.probe_eps) << '\n'
        << "delta_min = " << format_shortest(config.grid.delta_min) << '\n'
        << "delta_max = " << format_shortest(config.grid.delta_max) << '\n'
        << "steps = " << config.grid.steps << '\n';
    if (config.doppler) {
        const mor::DopplerConfig& d = *config.doppler;
        out << "doppler_width = " << format_shortest(d.width) << '\n'
            << "doppler_geometry = " << (d.geometry == mor::BeamGeometry::counter ? "counter" : "co") << '\n'
            << "doppler_method = "
            << (d.method == mor::QuadratureMethod::gauss_hermite ? "gauss-hermite" : "adaptive-simpson") << '\n'
            << "doppler_nodes = " << d.quadrature_nodes << '\n';
    }
    if (!config.output_path.empty())
        out << "output = " << config.output_path << '\n';
    out << "format = " << (config.format == OutputFormat::csv ? "csv" : "json") << '\n';
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(ConfigError::Kind::io, 0, path.string(),
                          "cannot open: " + std::error_code(errno, std::generic_category()).message());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string format_shortest(double value)
{
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

} // namespace morsim
