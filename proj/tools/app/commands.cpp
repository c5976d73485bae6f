#include "app/commands.hpp"

#include "app/output.hpp"
#include "app/search.hpp"

#include <mor/errors.hpp>
#include <mor/polarimetry.hpp>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

namespace morsim {

namespace {

bool write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open output '" << path.string() << "': " << std::strerror(errno) << '\n';
        return false;
    }
    file << content;
    file.flush();
    if (!file) {
        err << "error: writing '" << path.string() << "' failed: " << std::strerror(errno) << '\n';
        return false;
    }
    return true;
}

} // namespace

int run_spectrum(const SpectrumCommand& command, std::ostream& err)
{
    RunConfig config;
    try {
        config = parse_config(read_text_file(command.config));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }
    if (command.out)
        config.output_path = command.out->string();
    if (command.format)
        config.format = *command.format;
    if (config.output_path.empty()) {
        err << "config error: no output path (use --out or the 'output' key)\n";
        return kExitConfigError;
    }

    std::vector<mor::SpectrumRecord> records;
    try {
        records = mor::spectrum(config.params, config.medium, config.doppler, config.grid, config.evaluation);
    } catch (const mor::InvalidArgument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const mor::Error& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumericalError;
    }

    std::ostringstream text;
    if (config.format == OutputFormat::csv)
        write_spectrum_csv(text, records);
    else
        text << spectrum_json(records).dump(2) << '\n';
    return write_file(config.output_path, text.str(), err) ? kExitSuccess : kExitConfigError;
}

int run_enhancement(const EnhancementCommand& command, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    try {
        config = parse_config(read_text_file(command.config));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        const mor::Enhancement e = mor::enhancement_factor(config.params, config.medium, config.doppler,
                                                           command.delta, config.evaluation);
        out << "delta = " << format_sig17(command.delta) << '\n'
            << "t_y_on = " << format_sig17(e.t_y_on) << '\n'
            << "t_y_off = " << format_sig17(e.t_y_off) << '\n'
            << "enhancement = " << (e.undefined_baseline ? std::string("inf") : format_sig17(e.value)) << '\n';
        if (e.undefined_baseline)
            err << "warning: control-off transmission underflows; enhancement is undefined\n";
    } catch (const mor::InvalidArgument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const mor::Error& e) {
        err << "numerical error at delta = " << command.delta << ": " << e.what() << '\n';
        return kExitNumericalError;
    }
    return kExitSuccess;
}

int run_search(const SearchCommand& command, std::ostream& out, std::ostream& err)
{
    SearchSpec spec;
    try {
        spec = parse_search_spec(read_text_file(command.spec));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }
    if (command.top_k)
        spec.top_k = *command.top_k;

    SearchResult result;
    try {
        result = run_search(spec);
    } catch (const GridTooLarge& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const mor::InvalidArgument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    if (!write_file(command.out, to_json(result).dump(2) + "\n", err))
        return kExitConfigError;
    out << "evaluated " << result.evaluated << " points, skipped " << result.skipped << '\n';
    if (!result.entries.empty()) {
        const SearchEntry& best = result.entries.front();
        out << "best " << objective_name(result.objective) << " = " << format_sig17(best.objective_value) << " at";
        for (std::size_t k = 0; k < kNumSearchParameters; ++k)
            out << ' ' << parameter_name(static_cast<SearchParameter>(k)) << '=' << format_sig17(best.point[k]);
        out << '\n';
    }
    return kExitSuccess;
}

int run_validate(const ValidationOptions& options, std::ostream& out)
{
    return report(run_validation(options), out) ? kExitSuccess : kExitValidationFailure;
}

} // namespace morsim
