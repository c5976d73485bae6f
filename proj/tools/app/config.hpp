#pragma once

#include <mor/doppler.hpp>
#include <mor/params.hpp>
#include <mor/polarimetry.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morsim {

enum class OutputFormat
{
    csv,
    json,
};

/// Everything a spectrum/enhancement run needs, as read from a key = value file.
struct RunConfig
{
    mor::SystemParams params{.g1 = 1e-4, .g2 = 1e-4};
    mor::MediumConfig medium;
    std::optional<mor::DopplerConfig> doppler;
    mor::DetuningGrid grid;
    mor::EvaluationOptions evaluation;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;

    bool operator==(const RunConfig&) const = default;
};

inline constexpr std::size_t kMaxGridSteps = 10'000'000;

class ConfigError : public std::runtime_error
{
public:
    enum class Kind
    {
        parse,
        unknown_key,
        missing_key,
        invalid_value,
        io,
    };

    ConfigError(Kind kind, int line, std::string key, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// 1-based line number; 0 when the error is not tied to a line.
    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    Kind kind_;
    int line_;
    std::string key_;
};

struct KeyValue
{
    int line = 0;
    std::string key;
    std::string value;
};

/// Splits "key = value" lines; '#' starts a comment, blank lines are skipped, duplicate keys are errors.
std::vector<KeyValue> split_key_values(std::string_view text);

double parse_real(const KeyValue& entry);
mor::Complex parse_complex(const KeyValue& entry);

/// Parses a run configuration. Absent keys take the documented defaults; the grid keys are mandatory.
RunConfig parse_config(std::string_view text);
RunConfig build_config(const std::vector<KeyValue>& entries);

/// Canonical key = value text that parse_config maps back to an equal RunConfig.
std::string serialize_config(const RunConfig& config);

std::string read_text_file(const std::filesystem::path& path);

/// Shortest decimal text that round-trips to the same double.
std::string format_shortest(double value);

} // namespace morsim
