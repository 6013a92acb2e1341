#include "weber/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "weber/error.hpp"

namespace weber::numerics {

namespace {

GaussRule build_rule(std::size_t n) {
    GaussRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    if (n == 1) {
        rule.weights[0] = 2.0;
        return rule;
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        // Tricomi's initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        // Middle node x = 0: weight 2 / P_n'(0)^2.
        double p0 = 1.0, p1 = 0.0;
        double d0 = 0.0, d1 = 1.0;
        for (std::size_t k = 2; k <= n; ++k) {
            const double pk = (-(k - 1.0) * p0) / static_cast<double>(k);
            const double dk = ((2.0 * k - 1.0) * p1 - (k - 1.0) * d0) / static_cast<double>(k);
            p0 = p1, p1 = pk;
            d0 = d1, d1 = dk;
        }
        rule.weights[n / 2] = 2.0 / (d1 * d1);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t order) {
    static std::mutex mutex;
    static std::map<std::size_t, GaussRule> cache;
    if (order == 0) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre order must be positive");
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

double integrate_composite(const std::function<double(double)>& f, double lo, double hi, std::size_t panels,
                           std::size_t order) {
    const GaussRule& rule = gauss_legendre(order);
    const double width = (hi - lo) / static_cast<double>(panels);
    const double half = 0.5 * width;
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = lo + (static_cast<double>(p) + 0.5) * width;
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += panel * half;
    }
    return total;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                                  int max_doublings, std::size_t order) {
    std::size_t panels = 1;
    double previous = integrate_composite(f, lo, hi, panels, order);
    double err = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= max_doublings; ++d) {
        panels *= 2;
        const double current = integrate_composite(f, lo, hi, panels, order);
        err = std::abs(current - previous);
        if (err <= rel_tol * std::abs(current) || err == 0.0) return {current, err, true, d};
        previous = current;
    }
    return {previous, err, false, max_doublings};
}

std::vector<double> solve_cubic(double a, double b, double c, double d) {
    if (a == 0.0) throw Error(ErrorKind::InvalidArgument, "leading cubic coefficient is zero");
    const double B = b / a, C = c / a, D = d / a;
    const double shift = B / 3.0;
    const double p = C - B * B / 3.0;
    const double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
    const double half_q = q / 2.0, third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;
    const double disc_scale = half_q * half_q + std::abs(third_p * third_p * third_p);

    std::vector<double> y;
    if (disc_scale == 0.0) {
        y = {0.0, 0.0, 0.0};
    } else if (std::abs(disc) <= 1e-14 * disc_scale) {
        // Double root: y1 = 3q/p, y2 = y3 = -3q/(2p).
        y = {3.0 * q / p, -1.5 * q / p, -1.5 * q / p};
    } else if (disc > 0.0) {
        const double u = std::cbrt(-half_q - std::copysign(std::sqrt(disc), half_q));
        y = {u - third_p / u};
    } else {
        const double m = 2.0 * std::sqrt(-third_p);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) y.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
    }

    std::vector<double> roots;
    for (double yi : y) {
        double x = yi - shift;
        for (int it = 0; it < 2; ++it) {
            const double fx = ((x + B) * x + C) * x + D;
            const double dfx = (3.0 * x + 2.0 * B) * x + C;
            if (std::abs(dfx) <= 1e-8 * (std::abs(B * x) + std::abs(C) + 3.0 * x * x)) break;
            x -= fx / dfx;
        }
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double f_tol, double x_tol,
                     int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (std::abs(fa) <= f_tol) return {a, fa, 0};
    if (std::abs(fb) <= f_tol) return {b, fb, 0};
    if (std::signbit(fa) == std::signbit(fb)) {
        throw Error(ErrorKind::SpectralSolver, "root not bracketed: f(" + std::to_string(lo) + ") = " +
                                                   std::to_string(fa) + ", f(" + std::to_string(hi) +
                                                   ") = " + std::to_string(fb));
    }
    // Last two iterates for the secant step.
    double x0 = a, f0 = fa, x1 = b, f1 = fb;
    int slow_steps = 0;
    for (int it = 1; it <= max_iter; ++it) {
        const double width = b - a;
        double s = 0.5 * (a + b);
        if (slow_steps < 2 && f1 != f0) {
            const double secant = x1 - f1 * (x1 - x0) / (f1 - f0);
            if (secant > a && secant < b) s = secant;
        }
        const double fs = f(s);
        if (std::signbit(fs) == std::signbit(fa)) {
            a = s;
            fa = fs;
        } else {
            b = s;
            fb = fs;
        }
        x0 = x1, f0 = f1, x1 = s, f1 = fs;
        slow_steps = (b - a) > 0.5 * width ? slow_steps + 1 : 0;
        if (std::abs(fs) <= f_tol) return {s, fs, it};
        if (b - a <= x_tol) {
            return std::abs(fa) < std::abs(fb) ? RootResult{a, fa, it} : RootResult{b, fb, it};
        }
    }
    throw Error(ErrorKind::SpectralSolver, "root finder exceeded " + std::to_string(max_iter) + " iterations");
}

}  // namespace weber::numerics
