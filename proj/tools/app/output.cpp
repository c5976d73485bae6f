#include "app/output.hpp"

#include <array>
#include <charconv>

namespace morsim {

std::string format_sig17(double value)
{
    std::array<char, 64> buffer{};
    const auto [ptr, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
    return std::string(buffer.data(), ptr);
}

void write_spectrum_csv(std::ostream& out, const std::vector<mor::SpectrumRecord>& records)
{
    out << kSpectrumCsvHeader << '\n';
    for (const mor::SpectrumRecord& r : records) {
        out << format_sig17(r.delta) << ',' << format_sig17(r.chi_plus.real()) << ','
            << format_sig17(r.chi_plus.imag()) << ',' << format_sig17(r.chi_minus.real()) << ','
            << format_sig17(r.chi_minus.imag()) << ',' << format_sig17(r.theta_rad) << ',' << format_sig17(r.t_y)
            << '\n';
    }
}

nlohmann::json spectrum_json(const std::vector<mor::SpectrumRecord>& records)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const mor::SpectrumRecord& r : records) {
        rows.push_back({{"delta", r.delta},
                        {"re_chi_plus", r.chi_plus.real()},
                        {"im_chi_plus", r.chi_plus.imag()},
                        {"re_chi_minus", r.chi_minus.real()},
                        {"im_chi_minus", r.chi_minus.imag()},
                        {"theta_rad", r.theta_rad},
                        {"t_y", r.t_y}});
    }
    return rows;
}

} // namespace morsim
