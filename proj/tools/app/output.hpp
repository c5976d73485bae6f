#pragma once

#include <mor/polarimetry.hpp>

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace morsim {

inline constexpr std::string_view kSpectrumCsvHeader =
    "delta,re_chi_plus,im_chi_plus,re_chi_minus,im_chi_minus,theta_rad,t_y";

/// %.17g, independent of the global locale.
std::string format_sig17(double value);

void write_spectrum_csv(std::ostream& out, const std::vector<mor::SpectrumRecord>& records);
nlohmann::json spectrum_json(const std::vector<mor::SpectrumRecord>& records);

} // namespace morsim
