#include "app/search.hpp"

#include <mor/errors.hpp>
#include <mor/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace morsim {

namespace {

constexpr std::array<std::string_view, kNumSearchParameters> kParameterNames = {"G1", "Delta", "doppler_width",
                                                                                 "alpha_l"};

SearchRange parse_range(const KeyValue& entry)
{
    std::string text = entry.value;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    std::string tokens[3];
    std::string extra;
    if (!(in >> tokens[0] >> tokens[1] >> tokens[2]) || (in >> extra))
        throw ConfigError(ConfigError::Kind::parse, entry.line, entry.key, "expected 'min, max, steps'");

    SearchRange range;
    range.min = parse_real({entry.line, entry.key, tokens[0]});
    range.max = parse_real({entry.line, entry.key, tokens[1]});
    double steps = parse_real({entry.line, entry.key, tokens[2]});
    if (steps < 1.0 || steps != std::floor(steps) || steps > 1e9)
        throw ConfigError(ConfigError::Kind::invalid_value, entry.line, entry.key, "steps must be a positive integer");
    range.steps = static_cast<std::size_t>(steps);
    if (range.max < range.min)
        throw ConfigError(ConfigError::Kind::invalid_value, entry.line, entry.key, "min must be <= max");
    return range;
}

SearchPoint fixed_point(const RunConfig& config)
{
    return {config.params.G1.real(), config.params.Delta, config.doppler ? config.doppler->width : 0.0,
            config.medium.alpha_l};
}

double objective_of(const SearchEntry& entry, Objective objective)
{
    return objective == Objective::peak_ty ? entry.peak_ty : entry.enhancement;
}

} // namespace

std::vector<double> SearchRange::values() const
{
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        if (i == 0)
            out[i] = min;
        else if (i + 1 == steps)
            out[i] = max;
        else
            out[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return out;
}

std::string_view parameter_name(SearchParameter parameter)
{
    return kParameterNames[static_cast<std::size_t>(parameter)];
}

std::string_view objective_name(Objective objective)
{
    return objective == Objective::peak_ty ? "peak_ty" : "enhancement_at_delta0";
}

SearchSpec parse_search_spec(std::string_view text)
{
    SearchSpec spec;
    std::vector<KeyValue> run_entries;
    for (KeyValue& entry : split_key_values(text)) {
        bool consumed = false;
        for (std::size_t k = 0; k < kNumSearchParameters; ++k) {
            if (entry.key == std::string(kParameterNames[k]) + "_range") {
                spec.ranges[k] = parse_range(entry);
                consumed = true;
            }
        }
        if (consumed)
            continue;
        if (entry.key == "objective") {
            if (entry.value == "enhancement_at_delta0")
                spec.objective = Objective::enhancement_at_delta0;
            else if (entry.value == "peak_ty")
                spec.objective = Objective::peak_ty;
            else
                throw ConfigError(ConfigError::Kind::invalid_value, entry.line, entry.key,
                                  "expected 'enhancement_at_delta0' or 'peak_ty'");
        } else if (entry.key == "top") {
            const double k = parse_real(entry);
            if (k < 1.0 || k != std::floor(k))
                throw ConfigError(ConfigError::Kind::invalid_value, entry.line, entry.key, "must be a positive integer");
            spec.top_k = static_cast<std::size_t>(k);
        } else {
            run_entries.push_back(std::move(entry));
        }
    }
    spec.fixed = build_config(run_entries);
    return spec;
}

std::size_t grid_size(const SearchSpec& spec)
{
    double total = 1.0;
    for (const auto& range : spec.ranges)
        if (range)
            total *= static_cast<double>(range->steps);
    return total > static_cast<double>(std::numeric_limits<std::size_t>::max()) ? std::numeric_limits<std::size_t>::max()
                                                                                 : static_cast<std::size_t>(total);
}

SearchResult run_search(const SearchSpec& spec)
{
    const std::size_t total = grid_size(spec);
    if (total > kMaxSearchPoints)
        throw GridTooLarge("search grid has " + std::to_string(total) + " points; the limit is "
                           + std::to_string(kMaxSearchPoints));
    if (spec.top_k < 1)
        throw GridTooLarge("top K must be at least 1");

    const SearchPoint base = fixed_point(spec.fixed);
    std::array<std::vector<double>, kNumSearchParameters> axes;
    for (std::size_t k = 0; k < kNumSearchParameters; ++k)
        axes[k] = spec.ranges[k] ? spec.ranges[k]->values() : std::vector<double>{base[k]};

    std::vector<std::optional<SearchEntry>> slots(total);
    mor::parallel_for(total, [&](std::size_t flat) {
        // Last parameter varies fastest: flat index order is lexicographic order.
        SearchPoint point{};
        std::size_t rest = flat;
        for (std::size_t k = kNumSearchParameters; k-- > 0;) {
            point[k] = axes[k][rest % axes[k].size()];
            rest /= axes[k].size();
        }

        RunConfig config = spec.fixed;
        if (spec.ranges[static_cast<std::size_t>(SearchParameter::G1)])
            config.params.G1 = point[0];
        config.params.Delta = point[1];
        if (spec.ranges[static_cast<std::size_t>(SearchParameter::doppler_width)]) {
            mor::DopplerConfig doppler = config.doppler.value_or(mor::DopplerConfig{});
            doppler.width = point[2];
            config.doppler = doppler;
        }
        config.medium.alpha_l = point[3];

        try {
            const mor::Enhancement enhancement =
                mor::enhancement_factor(config.params, config.medium, config.doppler, 0.0, config.evaluation);
            const mor::SwitchMetrics metrics =
                mor::switch_metrics(config.params, config.medium, config.doppler, config.grid, config.evaluation);
            SearchEntry entry;
            entry.point = point;
            entry.enhancement = enhancement.value;
            entry.baseline_undefined = enhancement.undefined_baseline;
            entry.peak_ty = metrics.peak_ty;
            entry.delta_at_peak = metrics.delta_at_peak;
            entry.objective_value = objective_of(entry, spec.objective);
            if (!std::isnan(entry.objective_value))
                slots[flat] = entry;
        } catch (const mor::Error&) {
            // counted as skipped below
        }
    });

    SearchResult result;
    result.objective = spec.objective;
    result.evaluated = total;
    std::vector<SearchEntry> entries;
    entries.reserve(total);
    for (auto& slot : slots) {
        if (slot)
            entries.push_back(*slot);
        else
            ++result.skipped;
    }

    const std::size_t keep = std::min(spec.top_k, entries.size());
    const auto better = [](const SearchEntry& a, const SearchEntry& b) {
        if (a.objective_value != b.objective_value)
            return a.objective_value > b.objective_value;
        return a.point < b.point;
    };
    std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(keep), entries.end(), better);
    entries.resize(keep);
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].rank = i + 1;
    result.entries = std::move(entries);
    return result;
}

nlohmann::json to_json(const SearchResult& result)
{
    auto number = [](double v) -> nlohmann::json {
        if (std::isfinite(v))
            return v;
        return nullptr;
    };

    nlohmann::json records = nlohmann::json::array();
    for (const SearchEntry& entry : result.entries) {
        nlohmann::json params = nlohmann::json::object();
        for (std::size_t k = 0; k < kNumSearchParameters; ++k)
            params[std::string(kParameterNames[k])] = entry.point[k];
        records.push_back({{"rank", entry.rank},
                           {"params", params},
                           {"objective_value", number(entry.objective_value)},
                           {"peak_ty", number(entry.peak_ty)},
                           {"delta_at_peak", entry.delta_at_peak},
                           {"enhancement", number(entry.enhancement)},
                           {"baseline_undefined", entry.baseline_undefined}});
    }
    return {{"objective", std::string(objective_name(result.objective))},
            {"evaluated", result.evaluated},
            {"skipped", result.skipped},
            {"results", records}};
}

} // namespace morsim
