#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace morsim {

/// Deliberate faults injected into the oracle suite, used to show that each check can fail.
struct ValidationOptions
{
    bool flip_hamiltonian_sign = false;
    std::optional<int> doppler_nodes;
    unsigned seed = 20240611;
};

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-module oracle suite: closed form vs numeric steady state, RK4 vs steady state, Voigt identity,
/// quadrature convergence, physicality of steady states, trace preservation, transmission bounds.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

/// Prints one PASS/FAIL line per check; returns true iff all passed.
bool report(const std::vector<CheckResult>& checks, std::ostream& out);

} // namespace morsim
