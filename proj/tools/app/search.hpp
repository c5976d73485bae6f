#pragma once

#include "app/config.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace morsim {

enum class Objective
{
    enhancement_at_delta0,
    peak_ty,
};

/// Parameters the search can sweep, in lexicographic order of the search.
enum class SearchParameter : std::size_t
{
    G1 = 0,
    Delta = 1,
    doppler_width = 2,
    alpha_l = 3,
};

inline constexpr std::size_t kNumSearchParameters = 4;
inline constexpr std::size_t kMaxSearchPoints = 100'000'000;
inline constexpr std::size_t kDefaultTopK = 20;

/// Inclusive uniform range; steps == 1 means {min}.
struct SearchRange
{
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 1;

    std::vector<double> values() const;
};

struct SearchSpec
{
    std::array<std::optional<SearchRange>, kNumSearchParameters> ranges;
    Objective objective = Objective::enhancement_at_delta0;
    RunConfig fixed;
    std::size_t top_k = kDefaultTopK;
};

/// One tuple (G1, Delta, doppler_width, alpha_l).
using SearchPoint = std::array<double, kNumSearchParameters>;

struct SearchEntry
{
    std::size_t rank = 0;
    SearchPoint point{};
    double objective_value = 0.0;
    double peak_ty = 0.0;
    double delta_at_peak = 0.0;
    double enhancement = 0.0;
    bool baseline_undefined = false;
};

struct SearchResult
{
    Objective objective = Objective::enhancement_at_delta0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    std::vector<SearchEntry> entries; ///< best first, at most top_k
};

class GridTooLarge : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Run-config keys plus "<name>_range = min, max, steps" for G1, Delta, doppler_width, alpha_l,
/// "objective = enhancement_at_delta0 | peak_ty" and "top = K".
SearchSpec parse_search_spec(std::string_view text);

std::size_t grid_size(const SearchSpec& spec);

/// Exhaustive evaluation in lexicographic order, ranked by objective (descending) with ties broken by
/// the ascending parameter tuple. Points whose evaluation throws a numerical error are counted as skipped.
SearchResult run_search(const SearchSpec& spec);

nlohmann::json to_json(const SearchResult& result);

std::string_view parameter_name(SearchParameter parameter);
std::string_view objective_name(Objective objective);

} // namespace morsim
