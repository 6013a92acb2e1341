#include "weber/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "weber/error.hpp"

namespace weber {

namespace {

// r within a few ulps of alpha^2 counts as the critical radius: 0.01 and 0.1 * 0.1 differ in the last bit.
constexpr double kCriticalUlps = 4.0;

void require_positive_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(ErrorKind::InvalidArgument, "radius must be positive and finite, got " + std::to_string(r));
    }
}

// 1/g_rr = r / (r + k); throws on the degenerate metric.
double inverse_radial_metric(double r, double k) {
    const double denom = r + k;
    if (std::abs(denom) <= kCriticalUlps * std::numeric_limits<double>::epsilon() * std::abs(k)) {
        throw Error(ErrorKind::SingularMetric, "radial metric is singular at Weber's critical radius r = alpha^2", r);
    }
    return r / denom;
}

}  // namespace

double ModelParams::metric_shift() const noexcept {
    if (model == Model::Coulomb) return 0.0;
    const double a2 = alpha * alpha;
    return pair == Pair::ElectronProton ? a2 : -a2;
}

double ModelParams::potential_sign() const noexcept { return pair == Pair::ElectronProton ? -1.0 : 1.0; }

ModelParams electron_proton(double alpha, Model model) { return ModelParams{alpha, Pair::ElectronProton, model}; }

ModelParams proton_proton(double alpha, Model model) { return ModelParams{alpha, Pair::ProtonProton, model}; }

double RadialCoefficients::scale(double r) const noexcept {
    return std::abs(A) + 2.0 * std::abs(B) / r + std::abs(C) / (r * r) + std::abs(D1) / (r * r * r);
}

RadialCoefficients radial_coefficients(double energy, double ell, double alpha) noexcept {
    const double a2 = alpha * alpha;
    return RadialCoefficients{2.0 * energy, 1.0 + a2 * energy, -ell * ell + 2.0 * a2, -ell * ell * a2};
}

double eval_hamiltonian(const PhaseState& s, const ModelParams& params) {
    require_positive_radius(s.r);
    const double g_inv = inverse_radial_metric(s.r, params.metric_shift());
    return 0.5 * g_inv * s.p_r * s.p_r + s.p_phi * s.p_phi / (2.0 * s.r * s.r) + params.potential_sign() / s.r;
}

MetricComponents metric_components(double r, const ModelParams& params) {
    require_positive_radius(r);
    return {1.0 + params.metric_shift() / r, r * r};
}

bool at_critical_radius(double r, const ModelParams& params) noexcept {
    const double k = params.metric_shift();
    return k != 0.0 && std::abs(r + k) <= kCriticalUlps * std::numeric_limits<double>::epsilon() * std::abs(k);
}

Signature metric_signature(double r, const ModelParams& params) {
    if (at_critical_radius(r, params)) return Signature::Degenerate;
    const double g_rr = metric_components(r, params).g_rr;
    if (g_rr > 0.0) return Signature::Riemannian;
    if (g_rr < 0.0) return Signature::Minkowski;
    return Signature::Degenerate;
}

double critical_radius(const ModelParams& params) {
    if (params.pair != Pair::ProtonProton) {
        throw Error(ErrorKind::NoCriticalRadius, "electron-proton metric 1 + alpha^2/r is positive everywhere");
    }
    if (params.model == Model::Coulomb || params.alpha == 0.0) {
        throw Error(ErrorKind::NoCriticalRadius, "no critical radius for alpha = 0");
    }
    return params.alpha * params.alpha;
}

double radial_momentum(double r, double energy, double ell, double alpha) {
    require_positive_radius(r);
    const RadialCoefficients c = radial_coefficients(energy, ell, alpha);
    // Factored form (r + a^2)(2E r^2 + 2r - ell^2) / r^3 of c.radicand(r); it is exactly
    // zero at representable turning points where the expanded sum leaves ~1e-17.
    const double rad = (r + alpha * alpha) * ((2.0 * energy * r + 2.0) * r - ell * ell) / (r * r * r);
    if (rad >= 0.0) return std::sqrt(rad);
    if (rad >= -1e-12 * c.scale(r)) return 0.0;
    throw Error(ErrorKind::ForbiddenRegion,
                "r = " + std::to_string(r) + " lies outside the classically allowed region (radicand " +
                    std::to_string(rad) + ")");
}

PhaseRate flow_field(const PhaseState& s, const ModelParams& params) {
    require_positive_radius(s.r);
    const double k = params.metric_shift();
    const double g_inv = inverse_radial_metric(s.r, k);
    const double denom = s.r + k;
    const double r2 = s.r * s.r;
    PhaseRate d;
    d.r = g_inv * s.p_r;
    d.phi = s.p_phi / r2;
    // d/dr [r/(r+k)] = k/(r+k)^2
    d.p_r = -k * s.p_r * s.p_r / (2.0 * denom * denom) + s.p_phi * s.p_phi / (r2 * s.r) + params.potential_sign() / r2;
    d.p_phi = 0.0;
    return d;
}

double lagrangian(double r, double v_r, double v_phi, const ModelParams& params) {
    const MetricComponents g = metric_components(r, params);
    return 0.5 * (g.g_rr * v_r * v_r + g.g_phiphi * v_phi * v_phi) - params.potential_sign() / r;
}

double neumann_potential(double r, double v_r, double alpha) noexcept {
    return -(1.0 / r) * (1.0 + v_r * v_r * alpha * alpha / 2.0);
}

}  // namespace weber
