#include "weber/dynamics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace weber {

namespace {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kApsisBand = 1e-12;

Vec4 to_vec(const PhaseState& s) { return {s.r, s.phi, s.p_r, s.p_phi}; }

PhaseState from_vec(double t, const Vec4& y) { return {t, y[0], y[1], y[2], y[3]}; }

Vec4 rate(const Vec4& y, const ModelParams& params) {
    const PhaseRate d = flow_field(from_vec(0.0, y), params);
    return {d.r, d.phi, d.p_r, d.p_phi};
}

Mat4 jacobian(const Vec4& y, const ModelParams& params) {
    Mat4 jac;
    for (int j = 0; j < 4; ++j) {
        const double delta = 1e-7 * std::max(1.0, std::abs(y[j]));
        Vec4 up = y, down = y;
        up[j] += delta;
        down[j] -= delta;
        jac.col(j) = (rate(up, params) - rate(down, params)) / (2.0 * delta);
    }
    return jac;
}

// Gauss-Legendre collocation tableau (1 or 2 stages).
struct Tableau {
    int stages;
    std::array<std::array<double, 2>, 2> a;
    std::array<double, 2> b;
    std::array<double, 2> c;
};

const Tableau& tableau(Scheme scheme) {
    static const Tableau midpoint{1, {{{0.5, 0.0}, {0.0, 0.0}}}, {1.0, 0.0}, {0.5, 0.0}};
    static const double s3 = std::sqrt(3.0);
    static const Tableau gauss4{
        2,
        {{{0.25, 0.25 - s3 / 6.0}, {0.25 + s3 / 6.0, 0.25}}},
        {0.5, 0.5},
        {0.5 - s3 / 6.0, 0.5 + s3 / 6.0}};
    return scheme == Scheme::ImplicitMidpoint ? midpoint : gauss4;
}

// Feeds states in time order and emits apsides (sign changes of p_r).
class ApsisTracker {
public:
    explicit ApsisTracker(const ModelParams& params) : params_(params) {}

    void feed(const PhaseState& s, std::vector<Apsis>& out) {
        const int sign = s.p_r > kApsisBand ? 1 : (s.p_r < -kApsisBand ? -1 : 0);
        if (sign == 0) {
            if (!band_best_ || std::abs(s.p_r) < std::abs(band_best_->p_r)) band_best_ = s;
        } else {
            const bool first = last_sign_ == 0;
            if ((first && band_best_) || (!first && sign != last_sign_)) {
                if (prev_ && prev_sign_ == -sign) {
                    out.push_back(refine(*prev_, s, sign));
                } else {
                    out.push_back(make_apsis(*band_best_, sign, direction(s)));
                }
            }
            last_sign_ = sign;
            band_best_.reset();
        }
        prev_ = s;
        prev_sign_ = sign;
    }

private:
    double direction(const PhaseState& s) const {
        if (!prev_) return 1.0;
        return s.t >= prev_->t ? 1.0 : -1.0;
    }

    // sign: sign of p_r after the event.
    Apsis make_apsis(const PhaseState& at, int sign, double dir) const {
        const double inv_metric = at.r / (at.r + params_.metric_shift());
        const bool minimum = inv_metric * sign * dir > 0.0;
        return {at.t, at.r, at.phi, minimum ? ApsisKind::Periproton : ApsisKind::Apoproton};
    }

    Apsis refine(const PhaseState& s0, const PhaseState& s1, int sign) const {
        const PhaseRate d0 = flow_field(s0, params_);
        const PhaseRate d1 = flow_field(s1, params_);
        const double h = s1.t - s0.t;
        const auto hermite = [h](double u, double y0, double y1, double m0, double m1) {
            const double u2 = u * u, u3 = u2 * u;
            return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * m0 + (-2 * u3 + 3 * u2) * y1 +
                   (u3 - u2) * h * m1;
        };
        const auto p = [&](double u) { return hermite(u, s0.p_r, s1.p_r, d0.p_r, d1.p_r); };
        double lo = 0.0, hi = 1.0;
        const double p_lo = p(lo);
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::signbit(p(mid)) == std::signbit(p_lo)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const double u = 0.5 * (lo + hi);
        PhaseState at;
        at.t = s0.t + u * h;
        at.r = hermite(u, s0.r, s1.r, d0.r, d1.r);
        at.phi = hermite(u, s0.phi, s1.phi, d0.phi, d1.phi);
        at.p_r = 0.0;
        at.p_phi = s0.p_phi;
        return make_apsis(at, sign, h >= 0.0 ? 1.0 : -1.0);
    }

    ModelParams params_;
    std::optional<PhaseState> prev_;
    int prev_sign_ = 0;
    int last_sign_ = 0;
    std::optional<PhaseState> band_best_;
};

std::optional<double> critical(const ModelParams& params) {
    if (params.pair == Pair::ProtonProton && params.model == Model::Weber && params.alpha > 0.0) {
        return params.alpha * params.alpha;
    }
    return std::nullopt;
}

template <int S>
PhaseState gauss_step(const PhaseState& state, const ModelParams& params, double h, const IntegratorConfig& config,
                      const Tableau& tab) {
    constexpr int kDim = 4 * S;
    using VecZ = Eigen::Matrix<double, kDim, 1>;
    using MatZ = Eigen::Matrix<double, kDim, kDim>;

    const Vec4 y = to_vec(state);
    const std::optional<double> rho = critical(params);
    const Vec4 f0 = rate(y, params);
    const Mat4 jac = jacobian(y, params);

    // Stage increments Z_i = h sum_j a_ij f(y + Z_j), solved by simplified Newton
    // with the Jacobian frozen at the step start.
    MatZ lhs = MatZ::Identity();
    for (int i = 0; i < S; ++i) {
        for (int j = 0; j < S; ++j) lhs.template block<4, 4>(4 * i, 4 * j) -= h * tab.a[i][j] * jac;
    }
    const Eigen::PartialPivLU<MatZ> lu(lhs);

    VecZ z;
    for (int i = 0; i < S; ++i) z.template segment<4>(4 * i) = tab.c[i] * h * f0;

    std::array<Vec4, S> stage_rates;
    const auto eval_stages = [&] {
        for (int i = 0; i < S; ++i) {
            const Vec4 yi = y + z.template segment<4>(4 * i);
            if (!(yi[0] > kCollisionRadius)) {
                throw Error(ErrorKind::Collision, "collision: stage radius fell below r_floor", state.t);
            }
            if (rho && std::signbit(yi[0] - *rho) != std::signbit(y[0] - *rho)) {
                throw Error(ErrorKind::SignatureCrossing, "orbit crosses Weber's critical radius",
                            state.t + tab.c[i] * h);
            }
            stage_rates[i] = rate(yi, params);
        }
    };

    const double scale = 1.0 + y.cwiseAbs().maxCoeff();
    bool converged = false;
    for (int it = 0; it < config.max_newton_iters; ++it) {
        eval_stages();
        VecZ residual;
        for (int i = 0; i < S; ++i) {
            Vec4 sum = Vec4::Zero();
            for (int j = 0; j < S; ++j) sum += tab.a[i][j] * stage_rates[j];
            residual.template segment<4>(4 * i) = z.template segment<4>(4 * i) - h * sum;
        }
        const VecZ dz = lu.solve(-residual);
        if (!dz.allFinite()) break;
        z += dz;
        if (dz.cwiseAbs().maxCoeff() <= config.newton_tol * scale) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorKind::NewtonFailure,
                    "implicit stage equations did not converge in " + std::to_string(config.max_newton_iters) +
                        " iterations at t = " + std::to_string(state.t),
                    state.t);
    }
    eval_stages();
    Vec4 next = y;
    for (int i = 0; i < S; ++i) next += h * tab.b[i] * stage_rates[i];
    return from_vec(state.t + h, next);
}

}  // namespace

PhaseState implicit_step(const PhaseState& state, const ModelParams& params, double h, const IntegratorConfig& config) {
    const Tableau& tab = tableau(config.scheme);
    return tab.stages == 1 ? gauss_step<1>(state, params, h, config, tab) : gauss_step<2>(state, params, h, config, tab);
}

IntegrationOutcome integrate_until_failure(const PhaseState& initial, const ModelParams& params, double duration,
                                           const IntegratorConfig& config) {
    if (!(config.step > 0.0) || !(config.newton_tol > 0.0) || config.max_newton_iters < 1 ||
        config.record_stride < 1) {
        throw Error(ErrorKind::InvalidArgument, "integrator config requires step > 0, newton_tol > 0, "
                                                "max_newton_iters >= 1, record_stride >= 1");
    }
    // Validates r > 0 and the metric at the start.
    const double h0 = eval_hamiltonian(initial, params);

    IntegrationOutcome out;
    OrbitTrace& trace = out.trace;
    trace.params = params;
    trace.states.push_back(initial);

    const auto steps = static_cast<std::size_t>(std::ceil(std::abs(duration) / config.step - 1e-9));
    if (steps == 0) return out;
    const double h = duration / static_cast<double>(steps);
    const std::optional<double> rho = critical(params);

    ApsisTracker tracker(params);
    tracker.feed(initial, trace.apsides);
    PhaseState current = initial;
    try {
        for (std::size_t k = 1; k <= steps; ++k) {
            PhaseState next = implicit_step(current, params, h, config);
            next.t = initial.t + static_cast<double>(k) * h;
            if (!(next.r > kCollisionRadius) || !std::isfinite(next.r)) {
                throw Error(ErrorKind::Collision, "collision: radius fell below r_floor", next.t);
            }
            if (rho && std::signbit(next.r - *rho) != std::signbit(current.r - *rho)) {
                const double frac = (*rho - current.r) / (next.r - current.r);
                throw Error(ErrorKind::SignatureCrossing, "orbit crosses Weber's critical radius",
                            current.t + frac * h);
            }
            if (std::abs(next.phi - current.phi) >= std::numbers::pi) {
                throw Error(ErrorKind::InvalidArgument, "step too large: |delta phi| >= pi in one step", current.t);
            }
            trace.energy_drift = std::max(trace.energy_drift, std::abs(eval_hamiltonian(next, params) - h0));
            tracker.feed(next, trace.apsides);
            if (k % config.record_stride == 0 || k == steps) trace.states.push_back(next);
            current = next;
        }
    } catch (const Error& e) {
        if (trace.states.back().t != current.t) trace.states.push_back(current);
        out.stop = e;
    }
    return out;
}

OrbitTrace integrate(const PhaseState& initial, const ModelParams& params, double duration,
                     const IntegratorConfig& config) {
    IntegrationOutcome out = integrate_until_failure(initial, params, duration, config);
    if (out.stop) throw *out.stop;
    return std::move(out.trace);
}

std::vector<Apsis> detect_apsides(const OrbitTrace& trace) {
    std::vector<Apsis> apsides;
    if (trace.states.size() < 3) return apsides;
    ApsisTracker tracker(trace.params);
    for (const PhaseState& s : trace.states) tracker.feed(s, apsides);
    return apsides;
}

ShiftMeasurement measure_periproton_shift(const OrbitTrace& trace) {
    std::vector<double> phis;
    for (const Apsis& a : trace.apsides) {
        if (a.kind == ApsisKind::Periproton) phis.push_back(a.phi);
    }
    if (phis.size() < 2) {
        throw Error(ErrorKind::InsufficientData, "need at least two periproton passages, found " +
                                                     std::to_string(phis.size()));
    }
    std::vector<double> shifts;
    for (std::size_t k = 0; k + 1 < phis.size(); ++k) {
        const double advance = phis[k + 1] - phis[k];
        shifts.push_back(advance - std::copysign(kTwoPi, advance));
    }
    double mean = 0.0;
    for (double v : shifts) mean += v;
    mean /= static_cast<double>(shifts.size());
    double var = 0.0;
    for (double v : shifts) var += (v - mean) * (v - mean);
    const double stddev = shifts.size() > 1 ? std::sqrt(var / static_cast<double>(shifts.size() - 1)) : 0.0;
    return {mean, stddev, shifts.size()};
}

Closure rosette_closure(double shift, double tol) {
    const double x = shift / kTwoPi;
    // Convergents h_k / k_k of the continued fraction of x.
    long h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    double rest = x;
    for (int depth = 0; depth < 64; ++depth) {
        const double a = std::floor(rest);
        if (std::abs(a) > 1e15) break;
        const long ai = static_cast<long>(a);
        const long h = ai * h_prev + h_prev2;
        const long k = ai * k_prev + k_prev2;
        if (k > kMaxClosureDenominator) break;
        if (std::abs(shift - kTwoPi * static_cast<double>(h) / static_cast<double>(k)) <= tol) {
            return {true, h, k};
        }
        h_prev2 = h_prev, h_prev = h;
        k_prev2 = k_prev, k_prev = k;
        const double frac = rest - a;
        if (frac == 0.0) break;
        rest = 1.0 / frac;
    }
    return {false, 0, 0};
}

RosetteShape fit_rosette_shape(const OrbitTrace& trace, double gamma_guess) {
    if (trace.states.size() < 4 || !(gamma_guess > 0.0)) {
        throw Error(ErrorKind::InsufficientData, "shape fit needs at least four states and a positive gamma guess");
    }
    // Fits u = 1/r, which is exactly c0 + c1 cos(phi) + c2 sin(phi) for a Kepler ellipse.
    // For fixed gamma the model is linear in (c0, c1, c2).
    const auto solve = [&](double gamma) {
        Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
        Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
        for (const PhaseState& s : trace.states) {
            const Eigen::Vector3d row(1.0, std::cos(gamma * s.phi), std::sin(gamma * s.phi));
            normal += row * row.transpose();
            rhs += row / s.r;
        }
        const Eigen::Vector3d coef = normal.ldlt().solve(rhs);
        double sq = 0.0;
        for (const PhaseState& s : trace.states) {
            const double model = coef[0] + coef[1] * std::cos(gamma * s.phi) + coef[2] * std::sin(gamma * s.phi);
            sq += (1.0 / s.r - model) * (1.0 / s.r - model);
        }
        return std::pair{coef, std::sqrt(sq / static_cast<double>(trace.states.size()))};
    };
    // Golden-section search on the residual.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.8 * gamma_guess, hi = 1.2 * gamma_guess;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = solve(x1).second, f2 = solve(x2).second;
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2, x2 = x1, f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = solve(x1).second;
        } else {
            lo = x1, x1 = x2, f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = solve(x2).second;
        }
    }
    const double gamma = 0.5 * (lo + hi);
    const auto [coef, rms] = solve(gamma);
    const double amplitude = std::hypot(coef[1], coef[2]);
    return {1.0 / coef[0], amplitude / coef[0], gamma, std::atan2(coef[2], coef[1]), rms};
}

ProtonProtonReport pp_probe(const PhaseState& initial, double alpha, double duration, const IntegratorConfig& config) {
    const ModelParams params = proton_proton(alpha);
    if (at_critical_radius(initial.r, params)) {
        throw Error(ErrorKind::SingularMetric, "initial separation equals Weber's critical radius", initial.r);
    }
    ProtonProtonReport report;
    report.critical_radius = alpha > 0.0 ? critical_radius(params) : 0.0;
    report.initial_signature = metric_signature(initial.r, params);

    IntegrationOutcome out = integrate_until_failure(initial, params, duration, config);
    report.trace = std::move(out.trace);
    report.stop = std::move(out.stop);

    const auto& st = report.trace.states;
    if (st.size() >= 3) {
        const double dt = st[1].t - st[0].t;
        report.initial_acceleration = (st[2].r - 2.0 * st[1].r + st[0].r) / (dt * dt);
    } else {
        report.initial_acceleration = std::numeric_limits<double>::quiet_NaN();
    }
    report.separation_grew = st.back().r > st.front().r;
    return report;
}

}  // namespace weber
