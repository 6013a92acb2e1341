#pragma once

// Planar two-body models in atomic units (m_e = e = hbar = k0 = 1, c = 1/alpha).
//
//   Weber, electron-proton:  H = 1/2 r/(r + a^2) p_r^2 + p_phi^2/(2 r^2) - 1/r
//   Weber, proton-proton:    H = 1/2 r/(r - a^2) p_r^2 + p_phi^2/(2 r^2) + 1/r
//   Coulomb:                 same with a = 0
//
// The kinetic part is the inverse of the metric g_rr = 1 +- a^2/r, g_phiphi = r^2.

#include <utility>

namespace weber {

enum class Pair { ElectronProton, ProtonProton };
enum class Model { Coulomb, Weber };

struct ModelParams {
    double alpha = 0.0;
    Pair pair = Pair::ElectronProton;
    Model model = Model::Weber;

    /// Signed coefficient k of the radial metric g_rr = 1 + k/r.
    double metric_shift() const noexcept;
    /// Sign of the static potential q/r: -1 attractive, +1 repulsive.
    double potential_sign() const noexcept;
};

ModelParams electron_proton(double alpha, Model model = Model::Weber);
ModelParams proton_proton(double alpha, Model model = Model::Weber);

/// Point in extended phase space. phi is never reduced mod 2 pi.
struct PhaseState {
    double t = 0.0;
    double r = 1.0;
    double phi = 0.0;
    double p_r = 0.0;
    double p_phi = 0.0;
};

/// Time derivative of a PhaseState (dt/dt = 1 is implicit).
struct PhaseRate {
    double r = 0.0;
    double phi = 0.0;
    double p_r = 0.0;
    double p_phi = 0.0;
};

/// The quartet (A, B, C, D1) with p_r^2 = A + 2B/r + C/r^2 + D1/r^3 for the
/// Weber electron-proton Hamiltonian at energy E and angular momentum ell.
struct RadialCoefficients {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D1 = 0.0;

    double radicand(double r) const noexcept { return A + 2.0 * B / r + C / (r * r) + D1 / (r * r * r); }
    /// Sum of the absolute term magnitudes; used as the clamping scale.
    double scale(double r) const noexcept;
};

RadialCoefficients radial_coefficients(double energy, double ell, double alpha) noexcept;

double eval_hamiltonian(const PhaseState& state, const ModelParams& params);

struct MetricComponents {
    double g_rr;
    double g_phiphi;
};

MetricComponents metric_components(double r, const ModelParams& params);

enum class Signature { Riemannian, Degenerate, Minkowski };
/// True when r + metric_shift vanishes to within a few ulps of alpha^2.
bool at_critical_radius(double r, const ModelParams& params) noexcept;

Signature metric_signature(double r, const ModelParams& params);

/// Weber's critical radius rho = alpha^2 of the proton-proton metric.
double critical_radius(const ModelParams& params);

/// Non-negative branch of p_r on the classically allowed region. Radicands in
/// [-1e-12 * scale, 0) are clamped to zero.
double radial_momentum(double r, double energy, double ell, double alpha);

/// Hamilton's equations for the selected model.
PhaseRate flow_field(const PhaseState& state, const ModelParams& params);

/// Lagrangian L = 1/2 (g_rr v_r^2 + r^2 v_phi^2) - q/r.
double lagrangian(double r, double v_r, double v_phi, const ModelParams& params);

/// Neumann's velocity-dependent potential S = -(1/r)(1 + v_r^2 alpha^2 / 2),
/// i.e. the electron-proton Lagrangian is T_flat - S.
double neumann_potential(double r, double v_r, double alpha) noexcept;

}  // namespace weber
