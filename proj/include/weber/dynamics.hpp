#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weber/error.hpp"
#include "weber/hamiltonian.hpp"

namespace weber {

enum class Scheme { ImplicitMidpoint, GaussLegendre4 };

struct IntegratorConfig {
    double step = 1e-3;
    Scheme scheme = Scheme::GaussLegendre4;
    double newton_tol = 1e-12;
    int max_newton_iters = 25;
    /// Keep every k-th state in the trace (the final state is always kept).
    /// Apsides and energy drift are computed from every step regardless.
    std::size_t record_stride = 1;
};

/// Below this radius integration aborts with a Collision error.
inline constexpr double kCollisionRadius = 1e-6;

enum class ApsisKind { Periproton, Apoproton };

struct Apsis {
    double t;
    double r;
    double phi;
    ApsisKind kind;
};

struct OrbitTrace {
    ModelParams params;
    std::vector<PhaseState> states;
    std::vector<Apsis> apsides;
    double energy_drift = 0.0;
};

/// Fixed-step implicit symplectic integration over `duration` (negative
/// durations integrate backwards). The step actually used is
/// duration / ceil(|duration| / config.step).
/// Throws NewtonFailure, Collision, or SignatureCrossing (payload: time).
OrbitTrace integrate(const PhaseState& initial, const ModelParams& params, double duration,
                     const IntegratorConfig& config = {});

/// Like integrate, but a failing step ends the trace instead of throwing;
/// the error that stopped it is returned alongside.
struct IntegrationOutcome {
    OrbitTrace trace;
    std::optional<Error> stop;
};
IntegrationOutcome integrate_until_failure(const PhaseState& initial, const ModelParams& params, double duration,
                                           const IntegratorConfig& config = {});

/// Single step of the chosen scheme.
PhaseState implicit_step(const PhaseState& state, const ModelParams& params, double h, const IntegratorConfig& config);

/// Sign changes of p_r along the stored states, refined by cubic Hermite
/// interpolation; kinds alternate. |p_r| <= 1e-12 counts as zero.
std::vector<Apsis> detect_apsides(const OrbitTrace& trace);

struct ShiftMeasurement {
    double mean;
    double stddev;
    std::size_t periods;
};

/// Mean and sample standard deviation of phi(periproton_{k+1}) - phi(periproton_k) - 2 pi.
ShiftMeasurement measure_periproton_shift(const OrbitTrace& trace);

struct Closure {
    bool periodic;
    long p;  // shift / 2pi ~ p / q when periodic
    long q;
};

inline constexpr long kMaxClosureDenominator = 64;

/// Continued-fraction classification of shift / 2pi.
Closure rosette_closure(double shift, double tol);

/// Least-squares fit of scale / r(phi) ~ 1 + kappa cos(gamma phi - phase) to the
/// stored states, searching gamma in [0.8, 1.2] * gamma_guess. For a Kepler
/// ellipse kappa is the eccentricity, scale the semi-latus rectum and gamma = 1;
/// rms is the residual in 1/r.
struct RosetteShape {
    double scale;
    double kappa;
    double gamma;
    double phase;
    double rms;
};
RosetteShape fit_rosette_shape(const OrbitTrace& trace, double gamma_guess);

struct ProtonProtonReport {
    OrbitTrace trace;
    double critical_radius;       // 0 when alpha = 0
    Signature initial_signature;
    double initial_acceleration;  // second difference of r over the first two steps
    bool separation_grew;         // r(end) > r(0)
    std::optional<Error> stop;    // signature crossing, collision, ...
};

/// Integrates the proton-proton flow and reports the sign of r'' near the start.
/// Throws SingularMetric if initial.r == alpha^2.
ProtonProtonReport pp_probe(const PhaseState& initial, double alpha, double duration,
                            const IntegratorConfig& config = {});

}  // namespace weber
