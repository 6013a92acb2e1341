#include "weber/delay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "weber/error.hpp"
#include "weber/numerics.hpp"

namespace weber {

namespace {

constexpr std::size_t kGaussPerPanel = 8;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Solves the cyclic system m[i-1] + 4 m[i] + m[i+1] = rhs[i] (Sherman-Morrison).
std::vector<double> solve_cyclic_spline(const std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    const double a = 1.0, b = 4.0, c = 1.0;
    const double alpha = c, beta = a;  // corner entries
    const double gamma = -b;
    std::vector<double> diag(n, b);
    diag[0] = b - gamma;
    diag[n - 1] = b - alpha * beta / gamma;

    const auto thomas = [&](std::vector<double> d) {
        std::vector<double> cp(n), x(n);
        cp[0] = c / diag[0];
        d[0] /= diag[0];
        for (std::size_t i = 1; i < n; ++i) {
            const double m = diag[i] - a * cp[i - 1];
            cp[i] = c / m;
            d[i] = (d[i] - a * d[i - 1]) / m;
        }
        x[n - 1] = d[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - cp[i] * x[i + 1];
        return x;
    };

    const std::vector<double> x = thomas(rhs);
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    const std::vector<double> z = thomas(u);
    const double fact = (x[0] + beta * x[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = x[i] - fact * z[i];
    return m;
}

// Integral over [0, 1] of f(loop point), Gauss panels aligned with the spline knots.
template <class F>
double integrate_over_knots(const PeriodicLoop& loop, F&& f) {
    const std::size_t n = loop.size();
    return numerics::integrate_composite([&](double t) { return f(loop.eval(t)); }, 0.0, 1.0, n, kGaussPerPanel);
}

}  // namespace

DelayParams DelayParams::from_alpha(double alpha) {
    if (!(alpha >= 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be non-negative");
    return {alpha / std::numbers::sqrt2, alpha > 0.0 ? std::numbers::sqrt2 / alpha : INFINITY};
}

PeriodicLoop::PeriodicLoop(LoopSamples samples) : samples_(std::move(samples)) {
    const std::size_t n = samples_.size();
    if (n < 64 || !is_power_of_two(n)) {
        throw Error(ErrorKind::InvalidArgument, "loop sample count must be a power of two >= 64, got " +
                                                    std::to_string(n));
    }
    for (double v : samples_.values) {
        if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "loop values must be positive");
    }
    const double inv_h2 = static_cast<double>(n) * static_cast<double>(n);
    std::vector<double> rhs(n);
    const auto& y = samples_.values;
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = 6.0 * inv_h2 * (y[(i + 1) % n] - 2.0 * y[i] + y[(i + n - 1) % n]);
    }
    second_ = solve_cyclic_spline(rhs);
}

LoopPoint PeriodicLoop::eval(double t) const {
    const std::size_t n = samples_.size();
    const double h = 1.0 / static_cast<double>(n);
    double u = (t - std::floor(t)) * static_cast<double>(n);
    auto i = static_cast<std::size_t>(u);
    if (i >= n) i = n - 1;
    const double x = u - static_cast<double>(i);
    const std::size_t j = (i + 1) % n;
    const double yi = samples_.values[i], yj = samples_.values[j];
    const double mi = second_[i], mj = second_[j];
    const double w = 1.0 - x;
    LoopPoint p;
    p.r = w * yi + x * yj + h * h / 6.0 * ((w * w * w - w) * mi + (x * x * x - x) * mj);
    p.dr = (yj - yi) / h + h / 6.0 * (-(3.0 * w * w - 1.0) * mi + (3.0 * x * x - 1.0) * mj);
    p.d2r = w * mi + x * mj;
    return p;
}

LoopPoint eval_loop(const PeriodicLoop& loop, double t) { return loop.eval(t); }

std::size_t default_quad_points(const PeriodicLoop& loop) { return kGaussPerPanel * loop.size(); }

double retarded_action(const PeriodicLoop& loop, double a, std::size_t quad_points) {
    if (!(a >= 0.0) && !(a < 0.0)) throw Error(ErrorKind::InvalidArgument, "delay coefficient is NaN");
    if (quad_points == 0) quad_points = default_quad_points(loop);
    const std::size_t panels = std::max<std::size_t>(1, quad_points / kGaussPerPanel);
    const auto integrand = [&](double t) {
        const double retarded = t - a * loop.eval(t).r;
        return -1.0 / loop.eval(retarded).r;
    };
    return numerics::integrate_composite(integrand, 0.0, 1.0, panels, kGaussPerPanel);
}

double taylor_coefficient_numeric(const PeriodicLoop& loop, int k, double h, std::size_t quad_points) {
    const auto s = [&](double a) { return retarded_action(loop, a, quad_points); };
    switch (k) {
        case 0:
            return s(0.0);
        case 1:
            return (s(-2 * h) - 8 * s(-h) + 8 * s(h) - s(2 * h)) / (12 * h);
        case 2:
            return (-s(2 * h) + 16 * s(h) - 30 * s(0.0) + 16 * s(-h) - s(-2 * h)) / (12 * h * h) / 2.0;
        case 3:
            return (-s(3 * h) + 8 * s(2 * h) - 13 * s(h) + 13 * s(-h) - 8 * s(-2 * h) + s(-3 * h)) / (8 * h * h * h) /
                   6.0;
        default:
            throw Error(ErrorKind::UnsupportedOrder, "numeric Taylor coefficients are available for k <= 3");
    }
}

double taylor_coefficient_analytic(const PeriodicLoop& loop, int k) {
    switch (k) {
        case 0:
            return integrate_over_knots(loop, [](const LoopPoint& p) { return -1.0 / p.r; });
        case 1:
            return 0.0;
        case 2:
            return integrate_over_knots(loop, [](const LoopPoint& p) { return -p.dr * p.dr / p.r; });
        default:
            throw Error(ErrorKind::UnsupportedOrder, "analytic Taylor coefficients stop at second order");
    }
}

double neumann_density(const LoopPoint& p, double alpha) noexcept {
    return -(1.0 / p.r) * (1.0 + p.dr * p.dr * alpha * alpha / 2.0);
}

double neumann_action(const PeriodicLoop& loop, double alpha) {
    return integrate_over_knots(loop, [alpha](const LoopPoint& p) { return neumann_density(p, alpha); });
}

double kinetic_action(const PeriodicLoop& loop) {
    return integrate_over_knots(loop, [](const LoopPoint& p) { return 0.5 * p.dr * p.dr; });
}

double truncation_error(const PeriodicLoop& loop, double alpha, std::size_t quad_points) {
    const DelayParams dp = DelayParams::from_alpha(alpha);
    return std::abs(retarded_action(loop, dp.a, quad_points) - neumann_action(loop, alpha));
}

double TrigLoop::operator()(double t) const {
    double r = c0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
        const double w = 2.0 * std::numbers::pi * static_cast<double>(k + 1) * t;
        r += cos_coeffs[k] * std::cos(w) + sin_coeffs[k] * std::sin(w);
    }
    return r;
}

LoopSamples TrigLoop::sample(std::size_t n) const {
    LoopSamples s;
    s.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.values[i] = (*this)(static_cast<double>(i) / static_cast<double>(n));
    return s;
}

TrigLoop order_reference_loop() {
    TrigLoop loop;
    loop.c0 = 2.0;
    loop.cos_coeffs = {1.0, 0.0};
    loop.sin_coeffs = {0.0, 0.3};
    return loop;
}

std::vector<TrigLoop> random_loop_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    // 53 random bits -> [0, 1); identical on every platform, unlike uniform_real_distribution.
    const auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

    std::vector<TrigLoop> corpus;
    corpus.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t degree = 1 + static_cast<std::size_t>(uniform() * 5.0);
        TrigLoop loop;
        loop.c0 = 0.0;
        for (std::size_t k = 1; k <= degree; ++k) {
            const double decay = 1.0 / static_cast<double>(k * k);
            loop.cos_coeffs.push_back((2.0 * uniform() - 1.0) * decay);
            loop.sin_coeffs.push_back((2.0 * uniform() - 1.0) * decay);
        }
        double lo = INFINITY, hi = -INFINITY;
        for (int i = 0; i < 8192; ++i) {
            const double v = loop(i / 8192.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        // Affine map of [lo, hi] onto [target_lo, target_hi] inside [1.05, 4.95]. The span is capped
        // at 60% of the headroom: steeper loops push the a-stencils out of their h^4 regime.
        const double target_lo = 1.05 + 1.5 * uniform();
        const double target_hi = target_lo + (0.2 + 0.4 * uniform()) * (4.95 - target_lo);
        const double scale = (target_hi - target_lo) / (hi - lo);
        for (double& v : loop.cos_coeffs) v *= scale;
        for (double& v : loop.sin_coeffs) v *= scale;
        loop.c0 = target_lo - lo * scale;
        corpus.push_back(std::move(loop));
    }
    return corpus;
}

}  // namespace weber
