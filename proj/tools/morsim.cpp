#include "app/commands.hpp"
#include "app/search.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    CLI::App app{"Laser-controlled magneto-optical rotation simulator"};
    app.require_subcommand(1);

    const std::map<std::string, morsim::OutputFormat> formats{{"csv", morsim::OutputFormat::csv},
                                                              {"json", morsim::OutputFormat::json}};

    morsim::SpectrumCommand spectrum;
    std::string spectrum_out;
    morsim::OutputFormat spectrum_format = morsim::OutputFormat::csv;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Scan the probe detuning and write chi, theta and T_y");
    spectrum_cmd->add_option("--config", spectrum.config, "Run configuration (key = value)")->required();
    auto* out_opt = spectrum_cmd->add_option("--out", spectrum_out, "Output file");
    auto* format_opt = spectrum_cmd->add_option("--format", spectrum_format, "csv or json")
                           ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
                           ->option_text("csv|json");

    morsim::EnhancementCommand enhancement;
    auto* enhancement_cmd = app.add_subcommand("enhancement", "Control-on over control-off T_y at one detuning");
    enhancement_cmd->add_option("--config", enhancement.config, "Run configuration (key = value)")->required();
    enhancement_cmd->add_option("--delta", enhancement.delta, "Probe detuning")->required();

    morsim::SearchCommand search;
    std::size_t top_k = morsim::kDefaultTopK;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive parameter search, ranked JSON output");
    search_cmd->add_option("--spec", search.spec, "Search specification")->required();
    search_cmd->add_option("--out", search.out, "Output JSON file")->required();
    auto* top_opt = search_cmd->add_option("--top", top_k, "Number of ranked entries to keep")
                        ->check(CLI::PositiveNumber);

    morsim::ValidationOptions validation;
    int forced_nodes = 0;
    auto* validate_cmd = app.add_subcommand("validate", "Run the built-in oracle suite");
    validate_cmd->add_flag("--flip-hamiltonian-sign", validation.flip_hamiltonian_sign,
                           "Fault injection: negate the coupling terms of the Hamiltonian");
    auto* nodes_opt = validate_cmd->add_option("--doppler-nodes", forced_nodes,
                                               "Fault injection: Gauss-Hermite start size for the convergence check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : morsim::kExitConfigError;
    }

    if (*spectrum_cmd) {
        if (*out_opt)
            spectrum.out = spectrum_out;
        if (*format_opt)
            spectrum.format = spectrum_format;
        return morsim::run_spectrum(spectrum, std::cerr);
    }
    if (*enhancement_cmd)
        return morsim::run_enhancement(enhancement, std::cout, std::cerr);
    if (*search_cmd) {
        if (*top_opt)
            search.top_k = top_k;
        return morsim::run_search(search, std::cout, std::cerr);
    }
    if (*nodes_opt)
        validation.doppler_nodes = forced_nodes;
    return morsim::run_validate(validation, std::cout);
}
