#pragma once

#include "app/config.hpp"
#include "app/validate.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>

namespace morsim {

enum ExitCode : int
{
    kExitSuccess = 0,
    kExitValidationFailure = 1,
    kExitConfigError = 2,
    kExitNumericalError = 3,
};

/// Options of the `spectrum` subcommand; unset values fall back to the config file.
struct SpectrumCommand
{
    std::filesystem::path config;
    std::optional<std::filesystem::path> out;
    std::optional<OutputFormat> format;
};

struct EnhancementCommand
{
    std::filesystem::path config;
    double delta = 0.0;
};

struct SearchCommand
{
    std::filesystem::path spec;
    std::filesystem::path out;
    std::optional<std::size_t> top_k;
};

int run_spectrum(const SpectrumCommand& command, std::ostream& err);
int run_enhancement(const EnhancementCommand& command, std::ostream& out, std::ostream& err);
int run_search(const SearchCommand& command, std::ostream& out, std::ostream& err);
int run_validate(const ValidationOptions& options, std::ostream& out);

} // namespace morsim
