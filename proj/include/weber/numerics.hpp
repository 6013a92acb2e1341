#pragma once

// Shared numerical kernels: Gauss-Legendre rules, composite and adaptive
// quadrature, real cubic roots, and a bracketed scalar root finder.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace weber::numerics {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule with `order` points; nodes from Newton iteration on P_n.
const GaussRule& gauss_legendre(std::size_t order);

/// Composite rule: `panels` equal panels on [lo, hi], `order` points each.
double integrate_composite(const std::function<double(double)>& f, double lo, double hi, std::size_t panels,
                           std::size_t order = 8);

struct AdaptiveResult {
    double value;
    double est_error;
    bool converged;
    int doublings;
};

/// Doubles the number of panels until two successive estimates agree to
/// rel_tol relative to the newer estimate.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                                  int max_doublings = 30, std::size_t order = 16);

/// Real roots of a x^3 + b x^2 + c x + d (a != 0), ascending, repeated roots
/// listed with multiplicity. Trigonometric/Cardano form followed by two
/// Newton polishing steps per root.
std::vector<double> solve_cubic(double a, double b, double c, double d);

struct RootResult {
    double x;
    double fx;
    int iterations;
};

/// Bisection-safeguarded secant iteration on a sign-changing bracket.
/// Stops when |f| <= f_tol or the bracket shrinks to x_tol.
/// Throws weber::Error(SpectralSolver) if f(lo) and f(hi) have equal signs.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double f_tol, double x_tol,
                     int max_iter = 200);

}  // namespace weber::numerics
