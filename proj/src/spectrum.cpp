#include "weber/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "weber/actions.hpp"
#include "weber/error.hpp"
#include "weber/numerics.hpp"

namespace weber {

namespace {

void check_qn(const QuantumNumbers& qn) {
    if (qn.ell < 1 || qn.n_r < 0) {
        throw Error(ErrorKind::InvalidArgument, "quantum numbers require ell >= 1 and n_r >= 0");
    }
}

double second_order_formula(int n, int ell, double alpha, double third_coefficient) {
    const double nn = n, a2 = alpha * alpha;
    return -1.0 / (2.0 * nn * nn) - a2 / (2.0 * nn * nn * nn * ell) + third_coefficient * a2 / (nn * nn * nn * nn);
}

constexpr int kMaxWidenings = 8;

}  // namespace

QuantumNumbers quantum_numbers(int n, int ell) {
    if (ell < 1 || ell > n) {
        throw Error(ErrorKind::InvalidArgument,
                    "invalid quantum numbers n = " + std::to_string(n) + ", ell = " + std::to_string(ell));
    }
    return QuantumNumbers{n - ell, ell};
}

EnergyLevel level_second_order_weber(const QuantumNumbers& qn, double alpha) {
    check_qn(qn);
    return {qn, second_order_formula(qn.n(), qn.ell, alpha, 0.5), LevelMethod::SecondOrderWeber, 0.0};
}

EnergyLevel level_sommerfeld(const QuantumNumbers& qn, double alpha) {
    check_qn(qn);
    return {qn, second_order_formula(qn.n(), qn.ell, alpha, 0.375), LevelMethod::SommerfeldSecondOrder, 0.0};
}

double weber_sommerfeld_split(int n, double alpha) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "main quantum number must be >= 1");
    const double nn = n;
    return (0.5 - 0.375) * alpha * alpha / (nn * nn * nn * nn);
}

EnergyLevel level_coulomb(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "main quantum number must be >= 1");
    const double nn = n;
    return {QuantumNumbers{0, n}, -1.0 / (2.0 * nn * nn), LevelMethod::Coulomb, 0.0};
}

EnergyLevel level_exact(const QuantumNumbers& qn, double alpha, double tol) {
    check_qn(qn);
    if (2.0 * alpha * alpha >= static_cast<double>(qn.ell) * qn.ell) {
        throw Error(ErrorKind::FallToCenter, "ell^2 <= 2 alpha^2");
    }
    const double target = qn.n_r;
    const auto mismatch = [&](double e) { return radial_action_closed_form(e, qn.ell, alpha).value - target; };

    const double seed = level_second_order_weber(qn, alpha).energy;
    const double n = qn.n();
    double width = std::max(10.0 * alpha * alpha * std::max(1.0, 1.0 / (n * n * n)), 1e-9 * std::abs(seed));
    for (int attempt = 0; attempt <= kMaxWidenings; ++attempt, width *= 4.0) {
        const double lo = seed - width;
        const double hi = std::min(seed + width, 0.5 * seed);
        const double f_lo = mismatch(lo), f_hi = mismatch(hi);
        if (std::signbit(f_lo) == std::signbit(f_hi) && f_lo != 0.0 && f_hi != 0.0) continue;
        const numerics::RootResult root =
            numerics::find_root(mismatch, lo, hi, tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(seed));
        if (std::abs(root.fx) > tol) {
            throw Error(ErrorKind::SpectralSolver, "quantization residual " + std::to_string(root.fx) +
                                                       " above tolerance for n = " + std::to_string(qn.n()) +
                                                       ", ell = " + std::to_string(qn.ell));
        }
        return {qn, root.x, LevelMethod::ExactRootSolve, root.fx};
    }
    throw Error(ErrorKind::SpectralSolver, "could not bracket the quantized energy for n = " +
                                               std::to_string(qn.n()) + ", ell = " + std::to_string(qn.ell) +
                                               " after " + std::to_string(kMaxWidenings) + " widenings");
}

double transition_frequency(const EnergyLevel& a, const EnergyLevel& b) {
    if (a.energy == b.energy) throw Error(ErrorKind::ZeroFrequency, "transition between equal energies");
    return std::abs(a.energy - b.energy) / (2.0 * std::numbers::pi);
}

std::vector<SpectrumRow> spectrum_table(int n_max, double alpha, double tol, unsigned threads) {
    if (n_max < 1 || n_max > kMaxSpectrumN) {
        throw Error(ErrorKind::InvalidArgument, "n_max must lie in [1, " + std::to_string(kMaxSpectrumN) + "]");
    }
    std::vector<SpectrumRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        for (int ell = 1; ell <= n; ++ell) {
            SpectrumRow row;
            row.qn = quantum_numbers(n, ell);
            rows.push_back(row);
        }
    }

    const auto fill = [&](SpectrumRow& row) {
        row.e_coulomb = level_coulomb(row.qn.n()).energy;
        row.e_weber_2nd = level_second_order_weber(row.qn, alpha).energy;
        row.e_sommerfeld_2nd = level_sommerfeld(row.qn, alpha).energy;
        row.weber_minus_sommerfeld = weber_sommerfeld_split(row.qn.n(), alpha);
        try {
            const EnergyLevel exact = level_exact(row.qn, alpha, tol);
            row.e_exact = exact.energy;
            row.residual = exact.residual;
        } catch (const Error& e) {
            row.e_exact = std::numeric_limits<double>::quiet_NaN();
            row.residual = std::numeric_limits<double>::quiet_NaN();
            row.error = std::string(to_string(e.kind())) + ": " + e.what();
        }
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(rows.size()));
    if (workers <= 1) {
        for (SpectrumRow& row : rows) fill(row);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < rows.size(); i = next++) fill(rows[i]);
            });
        }
    }
    return rows;
}

}  // namespace weber
