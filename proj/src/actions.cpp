#include "weber/actions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "weber/error.hpp"
#include "weber/hamiltonian.hpp"
#include "weber/numerics.hpp"

namespace weber {

namespace {

constexpr double kPi = std::numbers::pi;

void check_angular(double ell, double alpha) {
    if (!(ell > 0.0)) throw Error(ErrorKind::InvalidArgument, "angular momentum ell must be positive");
    if (!(alpha >= 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
    if (ell * ell <= 2.0 * alpha * alpha) {
        throw Error(ErrorKind::FallToCenter, "ell^2 <= 2 alpha^2: the centrifugal barrier cannot hold the orbit");
    }
}

void check_tolerance(double rel_tol) {
    if (!(rel_tol > 1e-14 && rel_tol < 1e-3)) {
        throw Error(ErrorKind::InvalidArgument, "rel_tol must lie in (1e-14, 1e-3)");
    }
}

// Quantities of the substitution r = r_min + (r_max - r_min) sin^2(theta), theta in [0, pi/2].
// With the factorisation p_r^2 = A (r - r_min)(r - r_max)(r - r_outer) / r^3, p_r dr becomes
// 2 span^2 s^2 c^2 sqrt(-A (r - r_outer) / r^3) dtheta, which is smooth at both ends.
struct Substitution {
    TurningPoints tp;
    double A;
    double span;

    double radius(double theta) const {
        const double s = std::sin(theta);
        return tp.r_min + span * s * s;
    }
    // sqrt(-A (r - r_outer) / r^3): p_r with the vanishing factor span*sin*cos removed.
    double reduced_momentum(double r) const { return std::sqrt(-A * (r - tp.r_outer) / (r * r * r)); }
};

Substitution make_substitution(double energy, double ell, double alpha) {
    const TurningPoints tp = turning_points(energy, ell, alpha);
    return Substitution{tp, radial_coefficients(energy, ell, alpha).A, tp.r_max - tp.r_min};
}

double integrate_checked(const std::function<double(double)>& f, double rel_tol, const char* what) {
    const numerics::AdaptiveResult res = numerics::integrate_adaptive(f, 0.0, kPi / 2.0, rel_tol);
    if (!res.converged) {
        throw Error(ErrorKind::QuadratureFailure,
                    std::string(what) + " quadrature did not converge (est. error " + std::to_string(res.est_error) +
                        ")",
                    res.value);
    }
    return res.value;
}

}  // namespace

double circular_energy(double ell) { return -1.0 / (2.0 * ell * ell); }

TurningPoints turning_points(double energy, double ell, double alpha) {
    check_angular(ell, alpha);
    if (!(energy < 0.0)) {
        throw Error(ErrorKind::NoTorus, "energy " + std::to_string(energy) + " is not below the escape threshold");
    }
    const RadialCoefficients c = radial_coefficients(energy, ell, alpha);
    const std::vector<double> roots = numerics::solve_cubic(c.A, 2.0 * c.B, c.C, c.D1);
    if (roots.size() < 3 || roots[1] <= 0.0) {
        throw Error(ErrorKind::NoTorus, "no bound radial interval at energy " + std::to_string(energy) +
                                            " for ell = " + std::to_string(ell));
    }
    const TurningPoints tp{roots[1], roots[2], roots[0]};
    if (tp.r_max - tp.r_min <= 1e-12 * tp.r_max) {
        throw Error(ErrorKind::DegenerateTorus, "circular orbit: turning points coincide at r = " +
                                                    std::to_string(tp.r_min),
                    0.5 * (tp.r_min + tp.r_max));
    }
    return tp;
}

ActionResult radial_action_quadrature(double energy, double ell, double alpha, double rel_tol) {
    check_tolerance(rel_tol);
    const Substitution sub = make_substitution(energy, ell, alpha);
    const auto integrand = [&](double theta) {
        const double s = std::sin(theta), co = std::cos(theta);
        return 2.0 * sub.span * sub.span * s * s * co * co * sub.reduced_momentum(sub.radius(theta));
    };
    const numerics::AdaptiveResult res = numerics::integrate_adaptive(integrand, 0.0, kPi / 2.0, rel_tol);
    if (!res.converged) {
        throw Error(ErrorKind::QuadratureFailure, "radial action quadrature did not converge", res.value / kPi);
    }
    // n_r = (1/2pi) * 2 \int_{r_min}^{r_max} p_r dr
    return {res.value / kPi, ActionMethod::Quadrature, res.est_error / kPi};
}

ActionResult radial_action_closed_form(double energy, double ell, double alpha) {
    if (!(energy < 0.0)) throw Error(ErrorKind::UnboundOrbit, "closed form requires a bound energy E < 0");
    check_angular(ell, alpha);
    const double a2 = alpha * alpha;
    const double root_c = std::sqrt(ell * ell - 2.0 * a2);  // |sqrt(C)|
    const double b = 1.0 + a2 * energy;
    const double value = -root_c + b / std::sqrt(-2.0 * energy) - b * ell * ell * a2 / (2.0 * root_c * root_c * root_c);
    return {value, ActionMethod::ClosedForm, 0.0};
}

ActionResult radial_action_expanded(double energy, double ell, double alpha) {
    if (!(energy < 0.0)) throw Error(ErrorKind::UnboundOrbit, "expansion requires a bound energy E < 0");
    check_angular(ell, alpha);
    const double a2 = alpha * alpha;
    const double value = (1.0 + a2 * energy) / std::sqrt(-2.0 * energy) - ell + a2 / (2.0 * ell);
    return {value, ActionMethod::SecondOrder, 0.0};
}

double radial_action_second_order(int n, int ell, double alpha) {
    if (ell < 1 || n < ell) throw Error(ErrorKind::InvalidArgument, "requires n >= ell >= 1");
    const double n_r = n - ell;
    return static_cast<double>(n) * n - alpha * alpha * n_r / ell;
}

double apsidal_angle(double energy, double ell, double alpha, double rel_tol) {
    check_tolerance(rel_tol);
    const Substitution sub = make_substitution(energy, ell, alpha);
    const double a2 = alpha * alpha;
    // dphi/dr = (ell / r^2) / (r p_r / (r + a^2))
    const auto integrand = [&](double theta) {
        const double r = sub.radius(theta);
        return 4.0 * ell * (r + a2) / (r * r * r * sub.reduced_momentum(r));
    };
    return integrate_checked(integrand, rel_tol, "apsidal angle");
}

double radial_period(double energy, double ell, double alpha, double rel_tol) {
    check_tolerance(rel_tol);
    const Substitution sub = make_substitution(energy, ell, alpha);
    const double a2 = alpha * alpha;
    const auto integrand = [&](double theta) {
        const double r = sub.radius(theta);
        return 4.0 * (r + a2) / (r * sub.reduced_momentum(r));
    };
    return integrate_checked(integrand, rel_tol, "radial period");
}

}  // namespace weber
