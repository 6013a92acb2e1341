#pragma once

// Retarded Coulomb action on radial loops r: S^1 -> (0, inf),
//
//   S_pot(a) = \int_0^1 V(r(t - a r(t))) dt,   V(r) = -1/r,   a = 1/c_W = alpha/sqrt(2),
//
// its Taylor coefficients S^k = (1/k!) d^k S_pot / da^k at a = 0, and the
// comparison with Neumann's potential -(1/r)(1 + r'^2 alpha^2 / 2).
//
// For a general radial potential the coefficients are
//   S^0 = \int V(r),   S^1 = -\int V'(r) r' r = 0 (total derivative of a periodic function),
//   S^2 = 1/2 \int (V''(r) r'^2 r^2 + V'(r) r'' r^2) = -\int V'(r) r'^2 r   (after integrating by parts),
// which for Coulomb reduces to S^2 = -\int r'^2 / r.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace weber {

/// Uniform samples r(k/N), k = 0..N-1, of a 1-periodic positive function.
/// N must be a power of two >= 64.
struct LoopSamples {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
};

struct DelayParams {
    double a;    // 1 / c_W
    double c_w;  // sqrt(2) / alpha

    static DelayParams from_alpha(double alpha);
};

struct LoopPoint {
    double r;
    double dr;
    double d2r;
};

/// Periodic cubic spline through LoopSamples.
class PeriodicLoop {
public:
    explicit PeriodicLoop(LoopSamples samples);

    /// Value and first two derivatives at t (reduced mod 1).
    LoopPoint eval(double t) const;

    std::size_t size() const noexcept { return samples_.size(); }
    const LoopSamples& samples() const noexcept { return samples_; }

private:
    LoopSamples samples_;
    std::vector<double> second_;  // spline second derivatives at the knots
};

LoopPoint eval_loop(const PeriodicLoop& loop, double t);

/// Default node count for the t-quadrature: 8 Gauss points per spline segment.
std::size_t default_quad_points(const PeriodicLoop& loop);

/// \int_0^1 -1 / r(t - a r(t)) dt on quad_points Gauss-Legendre nodes
/// (8 per panel; 0 selects default_quad_points).
double retarded_action(const PeriodicLoop& loop, double a, std::size_t quad_points = 0);

/// k-th Taylor coefficient of a -> retarded_action at a = 0 from fourth-order
/// central differences with spacing h, divided by k!. k in {0, 1, 2, 3}.
double taylor_coefficient_numeric(const PeriodicLoop& loop, int k, double h = 1e-3, std::size_t quad_points = 0);

/// k = 0: \int -1/r;  k = 1: 0;  k = 2: -\int r'^2 / r.  Throws UnsupportedOrder for k >= 3.
double taylor_coefficient_analytic(const PeriodicLoop& loop, int k);

/// Integrand of neumann_action at one loop point.
double neumann_density(const LoopPoint& p, double alpha) noexcept;

/// \int_0^1 -(1/r)(1 + r'^2 alpha^2 / 2) dt, the second-order truncation of the retarded action.
double neumann_action(const PeriodicLoop& loop, double alpha);

/// 1/2 \int r'^2 dt for a radial loop.
double kinetic_action(const PeriodicLoop& loop);

/// |retarded_action(alpha / sqrt 2) - neumann_action(alpha)|; O(alpha^3).
double truncation_error(const PeriodicLoop& loop, double alpha, std::size_t quad_points = 0);

/// r(t) = c0 + sum_k (cos_k cos 2 pi k t + sin_k sin 2 pi k t).
struct TrigLoop {
    double c0 = 1.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    double operator()(double t) const;
    LoopSamples sample(std::size_t n) const;
};

/// r = 2 + cos 2 pi t + 0.3 sin 4 pi t. Loops symmetric under t -> -t have an even
/// S_pot(a), so S^3 = 0 and the truncation error drops by 16 per halving; this one does not.
TrigLoop order_reference_loop();

/// Deterministic corpus of random trigonometric loops of degree 1..5 with
/// values in [1, 5] and Fourier coefficients decaying like 1/k^2. Depends only on the seed (64-bit Mersenne twister with
/// a portable mapping to doubles).
std::vector<TrigLoop> random_loop_corpus(std::size_t count, std::uint64_t seed);

}  // namespace weber
