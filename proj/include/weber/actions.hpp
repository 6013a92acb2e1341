#pragma once

// Radial action n_r = (1/2pi) \oint p_r dr of the Weber electron-proton
// problem, computed by quadrature between the turning points, by Sommerfeld's
// closed-form residue expression, and by its first-order expansion in alpha^2.

namespace weber {

struct TurningPoints {
    double r_min;
    double r_max;
    /// Third (non-physical) root of A r^3 + 2B r^2 + C r + D1; always <= 0.
    double r_outer;
};

enum class ActionMethod { Quadrature, ClosedForm, SecondOrder };

struct ActionResult {
    double value;
    ActionMethod method;
    double est_error;
};

inline constexpr double kDefaultActionTol = 1e-10;

/// Periproton and apoproton radii at (energy, ell, alpha).
/// Throws NoTorus when no bound interval exists and DegenerateTorus (payload:
/// circular radius) when the two radii coincide.
TurningPoints turning_points(double energy, double ell, double alpha);

ActionResult radial_action_quadrature(double energy, double ell, double alpha, double rel_tol = kDefaultActionTol);

/// Sommerfeld's closed form.
///
/// With p_r^2 = A + 2B/r + C/r^2 + D1/r^3 the contour evaluation gives
///   n_r = -i (sqrt(C) - B/sqrt(A) - B D1 / (2 C sqrt(C))),
/// where sqrt(C) = -i sqrt(ell^2 - 2 alpha^2) (negative imaginary, C < 0) and
/// sqrt(A) = +i sqrt(-2E) (positive imaginary, A < 0). Substituting,
///   n_r = -sqrt(ell^2 - 2a^2) + (1 + a^2 E)/sqrt(-2E)
///         - (1 + a^2 E) ell^2 a^2 / (2 (ell^2 - 2a^2)^{3/2}),
/// which is real. The expression is exact through first order in D1, so it
/// departs from the true quadrature at O(alpha^4).
ActionResult radial_action_closed_form(double energy, double ell, double alpha);

/// First-order expansion of the closed form in alpha^2:
///   n_r ~ (1 + a^2 E)/sqrt(-2E) - ell + a^2/(2 ell).
ActionResult radial_action_expanded(double energy, double ell, double alpha);

/// The second-order relation -1/(2H) ~ (n_r + ell)^2 - alpha^2 n_r / ell with
/// n_r = n - ell. Requires n >= ell >= 1.
double radial_action_second_order(int n, int ell, double alpha);

/// Angle swept by phi between consecutive periproton passages,
/// 2 \int ell (r + a^2) / (r^3 p_r) dr. The periproton shift is this minus 2 pi.
double apsidal_angle(double energy, double ell, double alpha, double rel_tol = kDefaultActionTol);

/// Radial period 2 \int (r + a^2) / (r p_r) dr.
double radial_period(double energy, double ell, double alpha, double rel_tol = kDefaultActionTol);

/// Energy of the circular orbit at angular momentum ell, -1/(2 ell^2); the
/// turning points do not depend on alpha.
double circular_energy(double ell);

}  // namespace weber
