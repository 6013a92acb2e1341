#pragma once

#include <optional>
#include <string>
#include <vector>

namespace weber {

struct QuantumNumbers {
    int n_r = 0;
    int ell = 1;

    int n() const noexcept { return n_r + ell; }
};

/// Builds (n, ell) with n_r = n - ell; throws InvalidArgument unless 1 <= ell <= n.
QuantumNumbers quantum_numbers(int n, int ell);

enum class LevelMethod { ExactRootSolve, SecondOrderWeber, SommerfeldSecondOrder, Coulomb };

struct EnergyLevel {
    QuantumNumbers qn;
    double energy = 0.0;
    LevelMethod method = LevelMethod::Coulomb;
    double residual = 0.0;
};

inline constexpr double kDefaultSpectrumTol = 1e-12;

/// -1/(2n^2) - alpha^2/(2 n^3 ell) + alpha^2/(2 n^4)
EnergyLevel level_second_order_weber(const QuantumNumbers& qn, double alpha);

/// -1/(2n^2) - alpha^2/(2 n^3 ell) + 3 alpha^2/(8 n^4)
EnergyLevel level_sommerfeld(const QuantumNumbers& qn, double alpha);

/// level_second_order_weber - level_sommerfeld = (1/2 - 3/8) alpha^2 / n^4, computed
/// directly so that it keeps full relative precision.
double weber_sommerfeld_split(int n, double alpha);

/// -1/(2n^2)
EnergyLevel level_coulomb(int n);

/// Energy at which the closed-form radial action equals n_r, found by a
/// bracketed secant/bisection search seeded from the second-order formula.
EnergyLevel level_exact(const QuantumNumbers& qn, double alpha, double tol = kDefaultSpectrumTol);

/// (E_high - E_low) / (2 pi), always positive.
double transition_frequency(const EnergyLevel& a, const EnergyLevel& b);

struct SpectrumRow {
    QuantumNumbers qn;
    double e_coulomb = 0.0;
    double e_weber_2nd = 0.0;
    double e_sommerfeld_2nd = 0.0;
    double e_exact = 0.0;
    double residual = 0.0;
    /// Set when level_exact failed for this row; e_exact and residual are NaN.
    std::optional<std::string> error;

    /// Evaluated from the differing alpha^2/n^4 terms, not by subtracting the two energies.
    double weber_minus_sommerfeld = 0.0;
    double exact_minus_weber_2nd() const noexcept { return e_exact - e_weber_2nd; }
    double weber_2nd_minus_coulomb() const noexcept { return e_weber_2nd - e_coulomb; }
};

inline constexpr int kMaxSpectrumN = 20;

/// All (n, ell <= n) rows for n = 1..n_max, sorted by (n, ell). Rows are
/// evaluated on up to `threads` workers (0 = hardware concurrency); the
/// result order does not depend on scheduling.
std::vector<SpectrumRow> spectrum_table(int n_max, double alpha, double tol = kDefaultSpectrumTol,
                                        unsigned threads = 1);

}  // namespace weber
