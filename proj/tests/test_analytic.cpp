#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "brillouin/analytic.hpp"
#include "brillouin/dynamics.hpp"

using namespace brillouin;

namespace {

CouplingParams fig2_params(double g) {
    CouplingParams p;
    p.gamma = 0.01;
    p.Gamma = 1.0;
    p.g = g;
    p.delta1 = 0.3;
    p.delta2 = 3e-5;
    p.n_th = 1000.0;
    return p;
}

CouplingParams fig3_params(double g) {
    CouplingParams p;
    p.gamma = 1.0;
    p.Gamma = 0.1;
    p.g = g;
    p.delta1 = 0.05;
    p.delta2 = 5e-6;
    p.n_th = 1000.0;
    return p;
}

}  // namespace

TEST_CASE("closed form equals n_th at t = 0") {
    for (double g : {0.05, 2.0, 5.0, 10.0, 50.0}) {
        const CouplingParams p = fig2_params(g);
        CHECK(analytic_nb_full(p, 0.0) == doctest::Approx(p.n_th).epsilon(1e-9));
    }
}

TEST_CASE("closed form decays to the steady-state limit") {
    const CouplingParams p = fig2_params(10.0);
    const double late = analytic_nb_full(p, 60.0);
    CHECK(late == doctest::Approx(steady_state_limit(p)).epsilon(1e-6));
}

TEST_CASE("steady-state limit values") {
    SUBCASE("backward g/Gamma = 10") {
        // Oracle value frozen from direct evaluation of the rational form.
        CHECK(steady_state_limit(fig2_params(10.0)) ==
              doctest::Approx(990.0993447675299).epsilon(1e-12));
    }
    SUBCASE("g = 0 recovers n_th") {
        CHECK(steady_state_limit(fig2_params(0.0)) == doctest::Approx(1000.0).epsilon(1e-12));
    }
    SUBCASE("forward g/gamma = 15") {
        CHECK(steady_state_limit(fig3_params(15.0)) == doctest::Approx(91.0).epsilon(5e-3));
    }
    SUBCASE("g to infinity tends to n_th*Gamma/(Gamma+gamma)") {
        const CouplingParams p = fig2_params(5000.0);
        const double target = p.n_th * p.Gamma / (p.Gamma + p.gamma);
        CHECK(steady_state_limit(p) == doctest::Approx(target).epsilon(1e-4));
    }
    SUBCASE("within [0, n_th] for positive rates") {
        for (double g : {0.1, 1.0, 10.0, 100.0}) {
            const double v = steady_state_limit(fig2_params(g));
            CHECK(v >= 0.0);
            CHECK(v <= 1000.0);
        }
    }
}

TEST_CASE("Upsilon is non-negative and coefficients are finite") {
    for (double g : {0.0, 0.05, 1.0, 10.0, 50.0}) {
        const auto c = analytic_coefficients(fig2_params(g));
        CHECK(c.Upsilon >= 0.0);
        CHECK(std::isfinite(c.sum_c12));
        CHECK(std::isfinite(c.pole_c12));
        CHECK(std::isfinite(c.C3));
        CHECK(std::isfinite(c.C4));
    }
}

TEST_CASE("full closed form overlays the integrator within 1% of n_th") {
    for (double g : {5.0, 50.0}) {
        const CouplingParams p = fig2_params(g);
        const auto res = integrate(p, PulseSchedule::constant(p.g, 8.0),
                                   thermal_initial_state(p), 8.0, 0.01, 1e-10);
        for (std::size_t i = 0; i < res.times.size(); ++i) {
            const double expect = analytic_nb_full(p, res.times[i]);
            CHECK(std::abs(res.states[i].n_b - expect) < 0.01 * p.n_th);
        }
    }
}

TEST_CASE("reduced form overlays the integrator within 2% of n_th at g/Gamma = 50") {
    const CouplingParams p = fig2_params(50.0);
    const auto res = integrate(p, PulseSchedule::constant(p.g, 8.0), thermal_initial_state(p),
                               8.0, 0.01, 1e-10);
    for (std::size_t i = 0; i < res.times.size(); ++i) {
        const double expect = analytic_nb_reduced(p, res.times[i]);
        CHECK(std::abs(res.states[i].n_b - expect) < 0.02 * p.n_th);
    }
}

TEST_CASE("degenerate Gamma0 -> 0 point stays finite and matches the integrator") {
    // At delta1 = 0 and these rates Gamma0 vanishes; the regularized split
    // must still evaluate. Oracle value frozen from an independent
    // high-accuracy ODE solve at t = 0.5.
    CouplingParams p;
    p.gamma = 0.01;
    p.Gamma = 1.0;
    p.g = 10.0;
    p.delta1 = 0.0;
    p.delta2 = 0.0;
    p.n_th = 1000.0;
    CHECK(analytic_nb_full(p, 0.5) == doctest::Approx(282.2634572275773).epsilon(1e-9));
    CHECK(analytic_nb_full(p, 0.0) == doctest::Approx(p.n_th).epsilon(1e-10));
}

TEST_CASE("numeric Rabi frequency") {
    SUBCASE("undamped resonant limit gives 2g") {
        CouplingParams p;
        p.gamma = 1e-9;
        p.Gamma = 1e-9;
        p.g = 7.0;
        p.n_th = 1.0;
        const auto mode = rabi_frequency_numeric(p);
        CHECK(mode.omega == doctest::Approx(14.0).epsilon(1e-9));
        CHECK(mode.decay == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("g = 0 rotates at |delta1 - delta2| and decays at beta") {
        CouplingParams p;
        p.gamma = 0.4;
        p.Gamma = 1.2;
        p.g = 0.0;
        p.delta1 = 2.5;
        p.delta2 = 0.5;
        p.n_th = 1.0;
        const auto mode = rabi_frequency_numeric(p);
        CHECK(mode.omega == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(mode.decay == doctest::Approx(0.5 * (p.gamma + p.Gamma)).epsilon(1e-9));
    }
    SUBCASE("within 1% of the appendix approximation at g/Gamma = 10") {
        const CouplingParams p = fig2_params(10.0);
        CHECK(rabi_frequency_numeric(p).omega ==
              doctest::Approx(rabi_omega_appendix(p)).epsilon(0.01));
    }
    SUBCASE("converges to 2g as rates and detunings shrink") {
        CouplingParams p;
        p.g = 10.0;
        p.n_th = 1.0;
        double prev_err = 1.0;
        for (double eps : {1.0, 0.3, 0.1, 0.03}) {
            p.gamma = eps;
            p.Gamma = eps;
            p.delta1 = eps;
            p.delta2 = 0.0;
            const double err = std::abs(rabi_frequency_numeric(p).omega - 2.0 * p.g) / (2.0 * p.g);
            CHECK(err <= prev_err + 1e-12);
            prev_err = err;
        }
        CHECK(prev_err < 1e-4);
    }
}

TEST_CASE("printed Rabi approximations differ only in the detuning weight") {
    const CouplingParams p = fig2_params(10.0);
    const double d2 = p.delta1 * p.delta1;
    CHECK(rabi_omega_main_text(p) * rabi_omega_main_text(p) -
              rabi_omega_appendix(p) * rabi_omega_appendix(p) ==
          doctest::Approx(d2).epsilon(1e-9));
}

TEST_CASE("pulsed cooling limits") {
    SUBCASE("backward g/Gamma = 10") {
        const CouplingParams p = fig2_params(10.0);
        CHECK(instantaneous_limit(p) == doctest::Approx(78.53981633974482).epsilon(1e-12));
        CHECK(upper_limit(p) == doctest::Approx(103.53981633974483).epsilon(1e-12));
    }
    SUBCASE("no thermal load") {
        CouplingParams p = fig2_params(10.0);
        p.n_th = 0.0;
        CHECK(instantaneous_limit(p) == 0.0);
        CHECK(upper_limit(p) == 0.0);
    }
    SUBCASE("forward g/gamma = 15, Gamma/gamma = 0.2") {
        CouplingParams p = fig3_params(15.0);
        p.Gamma = 0.2;
        CHECK(instantaneous_limit(p) == doctest::Approx(10.47).epsilon(1e-3));
    }
    SUBCASE("g = 0 is an error") {
        CHECK_THROWS(instantaneous_limit(fig2_params(0.0)));
        CHECK_THROWS(upper_limit(fig2_params(0.0)));
    }
}

TEST_CASE("reduced form near its minimum is consistent with the pulsed limit") {
    const CouplingParams p = fig2_params(10.0);
    const double omega = rabi_frequency_numeric(p).omega;
    const double at_half = analytic_nb_reduced(p, std::numbers::pi / omega);
    CHECK(std::abs(at_half - instantaneous_limit(p)) < 0.15 * instantaneous_limit(p));
}
