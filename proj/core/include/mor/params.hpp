#pragma once

#include <complex>

namespace mor {

using Complex = std::complex<double>;

/// Basis ordering of the four-level scheme: ground, the two Zeeman sublevels, upper level.
enum class Level : int
{
    g = 0,
    one = 1,
    two = 2,
    e = 3,
};

inline constexpr int kNumLevels = 4;

constexpr int index(Level level) noexcept { return static_cast<int>(level); }

/**
 * Atomic and field parameters of the cascade g <-> {1, 2} <-> e.
 *
 * Every frequency is measured in units of the natural coherence decay rate.
 * The decay members are coherence (half) rates: the population of |1> decays
 * to |g> at 2*gamma1, the population of |e> decays to |i> at 2*Gamma_i.
 * Couplings are half Rabi frequencies.
 */
struct SystemParams
{
    double gamma1 = 1.0; ///< |1> -> |g>
    double gamma2 = 1.0; ///< |2> -> |g>
    double Gamma1 = 1.0; ///< |e> -> |1>
    double Gamma2 = 1.0; ///< |e> -> |2>

    double Omega = 0.0; ///< half the Zeeman splitting of |1>, |2>
    double delta = 0.0; ///< probe detuning from the centre of |1>, |2>
    double Delta = 0.0; ///< control detuning from the centre of |1>, |2>

    Complex g1{}; ///< sigma+ probe, |g> <-> |1>
    Complex g2{}; ///< sigma- probe, |g> <-> |2>
    Complex G1{}; ///< sigma- control, |1> <-> |e>
    Complex G2{}; ///< sigma+ control, |2> <-> |e>

    /// Throws InvalidArgument unless all rates are positive and every value is finite.
    void validate() const;

    bool operator==(const SystemParams&) const = default;
};

} // namespace mor
