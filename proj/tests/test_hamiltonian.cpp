#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "weber/hamiltonian.hpp"

using namespace weber;
using weber::test::thrown_kind;

namespace {

constexpr double kAlpha137 = 1.0 / 137.0;

PhaseState state(double r, double p_r, double p_phi) { return PhaseState{0.0, r, 0.0, p_r, p_phi}; }

}  // namespace

TEST_CASE("hamiltonian at fixed points") {
    CHECK(eval_hamiltonian(state(1, 0, 1), electron_proton(0.0)) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(eval_hamiltonian(state(1, 0, 1), electron_proton(kAlpha137)) == doctest::Approx(-0.5).epsilon(1e-15));
    // 0.5 / 1.01 - 1
    CHECK(eval_hamiltonian(state(1, 1, 0), electron_proton(0.1)) == doctest::Approx(-0.504950495049505).epsilon(1e-14));
    // coulomb model ignores alpha
    CHECK(eval_hamiltonian(state(1, 1, 0), electron_proton(0.1, Model::Coulomb)) == doctest::Approx(-0.5));
    // proton-proton: 0.5 * 1 / (1 - 0.01) + 1
    CHECK(eval_hamiltonian(state(1, 1, 0), proton_proton(0.1)) == doctest::Approx(0.5 / 0.99 + 1.0));
}

TEST_CASE("hamiltonian rejects bad input") {
    CHECK(thrown_kind([] { eval_hamiltonian(state(0.0, 0, 1), electron_proton(0.1)); }) ==
          ErrorKind::InvalidArgument);
    CHECK(thrown_kind([] { eval_hamiltonian(state(-1.0, 0, 1), electron_proton(0.1)); }) ==
          ErrorKind::InvalidArgument);
    CHECK(thrown_kind([] { eval_hamiltonian(state(0.01, 1, 0), proton_proton(0.1)); }) == ErrorKind::SingularMetric);
}

TEST_CASE("inside the critical radius the proton-proton kinetic term is negative") {
    const ModelParams pp = proton_proton(0.1);
    const double h = eval_hamiltonian(state(0.005, 1, 0), pp);
    CHECK(h == doctest::Approx(0.5 * 0.005 / (0.005 - 0.01) + 1.0 / 0.005));
}

TEST_CASE("metric components and signature") {
    const auto flat = metric_components(1.0, electron_proton(0.0));
    CHECK(flat.g_rr == 1.0);
    CHECK(flat.g_phiphi == 1.0);

    const double a = 0.1, a2 = a * a;
    CHECK(metric_components(a2 / 2, proton_proton(a)).g_rr == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(metric_components(a2, proton_proton(a)).g_rr == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(metric_components(3.0, electron_proton(a)).g_phiphi == 9.0);

    CHECK(metric_signature(2 * a2, proton_proton(a)) == Signature::Riemannian);
    CHECK(metric_signature(a2 / 2, proton_proton(a)) == Signature::Minkowski);
    CHECK(metric_signature(a2, proton_proton(a)) == Signature::Degenerate);
    CHECK(metric_signature(0.01, proton_proton(0.1)) == Signature::Degenerate);
    CHECK(metric_signature(1e-9, electron_proton(a)) == Signature::Riemannian);
}

TEST_CASE("critical radius") {
    CHECK(critical_radius(proton_proton(1.0)) == 1.0);
    CHECK(critical_radius(proton_proton(kAlpha137)) == doctest::Approx(1.0 / 18769.0).epsilon(1e-15));
    CHECK(thrown_kind([] { critical_radius(proton_proton(0.0)); }) == ErrorKind::NoCriticalRadius);
    CHECK(thrown_kind([] { critical_radius(electron_proton(0.1)); }) == ErrorKind::NoCriticalRadius);
}

TEST_CASE("radial momentum") {
    CHECK(radial_momentum(1.0, -0.5, 1.0, 0.0) == 0.0);
    CHECK(radial_momentum(2.0, -0.125, 1.0, 0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(radial_momentum(1.0, -0.5, 1.0, 0.1) == 0.0);

    // p_r^2 factors as (r + a^2)(2E r^2 + 2r - ell^2) / r^3
    const double r = 1.7, e = -0.2, ell = 1.3, a = 0.05;
    const double expect = std::sqrt((r + a * a) * (2 * e * r * r + 2 * r - ell * ell) / (r * r * r));
    CHECK(radial_momentum(r, e, ell, a) == doctest::Approx(expect).epsilon(1e-14));

    CHECK(thrown_kind([] { radial_momentum(10.0, -0.5, 1.0, 0.0); }) == ErrorKind::ForbiddenRegion);
    CHECK(thrown_kind([] { radial_momentum(0.0, -0.5, 1.0, 0.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("radial momentum clamps round-off at turning points") {
    // Kepler turning point 4 - 2 sqrt 3 is not representable; the radicand comes out ~1e-17.
    const double r_min = 4.0 - 2.0 * std::sqrt(3.0);
    CHECK(radial_momentum(r_min, -0.125, 1.0, 0.0) < 1e-7);
    CHECK(radial_momentum(std::nextafter(r_min, 0.0), -0.125, 1.0, 0.0) < 1e-7);
}

TEST_CASE("flow field") {
    const PhaseRate circ = flow_field(state(1, 0, 1), electron_proton(0.0));
    CHECK(circ.r == 0.0);
    CHECK(circ.phi == 1.0);
    CHECK(circ.p_r == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(circ.p_phi == 0.0);

    const PhaseRate d = flow_field(state(1, 1, 0), electron_proton(1.0));
    CHECK(d.r == doctest::Approx(0.5));
    CHECK(d.p_r == doctest::Approx(-1.125));

    // pure Coulomb repulsion pushes outwards everywhere
    for (double r : {1e-3, 0.1, 1.0, 10.0}) {
        CHECK(flow_field(state(r, 0, 0), proton_proton(0.0, Model::Coulomb)).p_r > 0.0);
    }
}

TEST_CASE("flow field matches finite-difference gradients of H") {
    weber::test::Uniform u(7);
    for (int i = 0; i < 100; ++i) {
        const double alpha = u(0.0, 0.2);
        const ModelParams params = i % 3 == 2 ? proton_proton(alpha) : electron_proton(alpha);
        const double r_lo = params.pair == Pair::ProtonProton ? 2.0 * alpha * alpha + 0.05 : 0.05;
        const PhaseState s = state(u(r_lo, 8.0), u(-2.0, 2.0), u(-2.0, 2.0));
        const PhaseRate f = flow_field(s, params);

        const double h_r = 1e-6 * s.r;
        const double h_p = 1e-6;
        auto at = [&](double dr, double dpr, double dpphi) {
            return eval_hamiltonian(state(s.r + dr, s.p_r + dpr, s.p_phi + dpphi), params);
        };
        const double dh_dr = (at(h_r, 0, 0) - at(-h_r, 0, 0)) / (2 * h_r);
        const double dh_dpr = (at(0, h_p, 0) - at(0, -h_p, 0)) / (2 * h_p);
        const double dh_dpphi = (at(0, 0, h_p) - at(0, 0, -h_p)) / (2 * h_p);

        const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)); };
        CHECK(close(f.r, dh_dpr));
        CHECK(close(f.phi, dh_dpphi));
        CHECK(close(f.p_r, -dh_dr));
        CHECK(f.p_phi == 0.0);
    }
}

TEST_CASE("radial momentum round trip through H") {
    weber::test::Uniform u(11);
    for (int i = 0; i < 100; ++i) {
        const double alpha = u(0.0, 0.1);
        const double ell = u(0.5, 3.0);
        const double e = u(-0.5 / (ell * ell) * 0.95, -0.01);
        // radius strictly between the Kepler turning points
        const double disc = std::sqrt(1.0 + 2.0 * e * ell * ell);
        const double r_min = (-1.0 + disc) / (2.0 * e), r_max = (-1.0 - disc) / (2.0 * e);
        const double lo = std::min(r_min, r_max), hi = std::max(r_min, r_max);
        const double r = lo + (hi - lo) * u(0.05, 0.95);
        const double p_r = radial_momentum(r, e, ell, alpha);
        const double h = eval_hamiltonian(state(r, p_r, ell), electron_proton(alpha));
        CHECK(std::abs(h - e) < 1e-12);
    }
}

TEST_CASE("coulomb limit") {
    weber::test::Uniform u(3);
    for (int i = 0; i < 20; ++i) {
        const PhaseState s = state(u(0.1, 5.0), u(-1, 1), u(-1, 1));
        CHECK(eval_hamiltonian(s, electron_proton(0.0)) == eval_hamiltonian(s, electron_proton(0.3, Model::Coulomb)));
        const PhaseRate a = flow_field(s, electron_proton(0.0));
        const PhaseRate b = flow_field(s, electron_proton(0.3, Model::Coulomb));
        CHECK(a.r == b.r);
        CHECK(a.p_r == b.p_r);
    }
}

TEST_CASE("neumann potential is the velocity-dependent part of the lagrangian") {
    weber::test::Uniform u(5);
    for (int i = 0; i < 50; ++i) {
        const double r = u(0.1, 5.0), v_r = u(-2, 2), v_phi = u(-2, 2), alpha = u(0, 0.2);
        const double flat = 0.5 * (v_r * v_r + r * r * v_phi * v_phi);
        const double l = lagrangian(r, v_r, v_phi, electron_proton(alpha));
        CHECK(std::abs((flat - l) - neumann_potential(r, v_r, alpha)) < 1e-14 * std::max(1.0, std::abs(l)));
    }
}
