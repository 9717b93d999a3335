#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gdr/curvature.hpp"
#include "gdr/rates.hpp"
#include "gdr/schedules.hpp"
#include "gdr/thresholds.hpp"

using namespace gdr;

TEST_CASE("convex denominator") {
    CHECK(denom_convex(gamma_bar(2, 0.0), 2).denominator == doctest::Approx(7.423).epsilon(5e-4));
    CHECK(denom_convex(1.0, 10).denominator == doctest::Approx(21.0).epsilon(1e-14));
    // at gl = gbar_N both minimum arguments coincide
    for (std::int64_t n : {1, 3, 6}) {
        const double g = gamma_bar(n, 0.0);
        const double lin = (-1.0 + std::pow(1.0 - g, -2.0 * n)) / g;
        CHECK(2.0 * n == doctest::Approx(lin).epsilon(1e-8));
    }
    CHECK_THROWS_AS(denom_convex(2.0, 3), std::domain_error);
}

TEST_CASE("strongly convex denominator") {
    CHECK(denom_strongly_convex(gamma_bar(5, 1e-3), 1e-3, 5).denominator
          == doctest::Approx(18.633).epsilon(5e-4));
    const double std_choice = denom_strongly_convex(2.0 / 1.001, 1e-3, 10).denominator;
    CHECK(std_choice == doctest::Approx(1.041).epsilon(5e-4));
    // mu -> 0 recovers the convex rate
    for (double gl : {0.7, 1.5}) {
        for (std::int64_t n : {3, 4}) {
            const double a = denom_strongly_convex(gl, 1e-9, n).denominator;
            const double b = denom_convex(gl, n).denominator;
            CHECK(a == doctest::Approx(b).epsilon(1e-6));
        }
    }
    CHECK(denom_strongly_convex(0.5, 0.1, 4).regime.kind == RegimeKind::linear_mu);
    CHECK(denom_strongly_convex(1.9, 0.1, 4).regime.kind == RegimeKind::linear_L);
}

TEST_CASE("the three P_N forms agree") {
    std::mt19937 rng(17);
    double worst = 0.0;
    for (double kappa : {-2.0, -1.0, -0.1, -1e-3}) {
        for (int i = 1; i <= 200; ++i) {
            const double gl = 2.0 * i / 201.0;
            if (std::abs(gl - 1.0) < 1e-9) continue;
            const double gm = kappa * gl;
            for (std::int64_t n = 1; n <= 8; ++n) {
                const double a = p_n_sum(gl, gm, n);
                const double b = p_n_min(gl, gm, n);
                const double c = p_n_piecewise(gl, gm, n);
                const double scale = std::max(1.0, std::abs(a));
                worst = std::max({worst, std::abs(a - b) / scale, std::abs(a - c) / scale});
            }
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("P_N at special points") {
    // gl in (0,1]: P_N = (2 + gl*gm/(gl-gm)) N
    for (double gl : {0.3, 0.8, 1.0}) {
        const double kappa = -0.7;
        const double gm = kappa * gl;
        CHECK(p_n_sum(gl, gm, 6)
              == doctest::Approx((2.0 + gl * gm / (gl - gm)) * 6.0).epsilon(1e-12));
    }
    // at the threshold the piecewise expression collapses to the linear term
    for (std::int64_t n : {2, 4}) {
        const double kappa = -0.5;
        const double g = gamma_bar(n, kappa);
        const double lin = (-1.0 + std::pow(1.0 - g, -2.0 * n)) / g;
        CHECK(p_n_sum(g, kappa * g, n) == doctest::Approx(lin).epsilon(1e-9));
    }
    // gm -> 0-: P_N -> 2N, exactly in the sum form at gm = -0
    CHECK(p_n_sum(1.7, -1e-300, 5) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("nonconvex denominator anchors") {
    const double gstar = opt_const_nonconvex_asymptotic(-1e-3);
    CHECK(denom_nonconvex_const(gstar, -1e-3, 10).denominator
          == doctest::Approx(3.542).epsilon(5e-4));
    const OptNumericResult opt10 = opt_const_nonconvex_numeric(-1e-3, 10);
    CHECK(opt10.denominator == doctest::Approx(36.999).epsilon(5e-4));
    // deep nonconvexity recovers the L-only rate
    const double nest = denom_classical_nesterov(std::vector<double>(4, 0.7));
    CHECK(denom_nonconvex_const(0.7, -1e6, 4).denominator
          == doctest::Approx(nest).epsilon(1e-3));
    CHECK(nest == doctest::Approx(1.0 + 4.0 * 0.7 * 1.3).epsilon(1e-14));
}

TEST_CASE("continuity across thresholds") {
    // straddle each root tightly so the smooth drift cannot mask a jump
    for (double kappa : {-1.0, -0.2}) {
        for (std::int64_t k = 1; k <= 5; ++k) {
            const double g = gamma_bar(k, kappa);
            const double below = denom_nonconvex_const(g - 1e-12, kappa, 6).denominator;
            const double above = denom_nonconvex_const(g + 1e-12, kappa, 6).denominator;
            CHECK(std::abs(above - below) < 1e-8 * std::max(1.0, std::abs(below)));
        }
    }
    // convex rate is continuous across gbar_N as well
    for (std::int64_t n : {2, 5}) {
        const double g = gamma_bar(n, 0.0);
        CHECK(denom_convex(g - 1e-12, n).denominator
              == doctest::Approx(denom_convex(g + 1e-12, n).denominator).epsilon(1e-8));
    }
}

TEST_CASE("dominance over the classical rates") {
    for (double gl = 0.05; gl < 2.0; gl += 0.05) {
        for (std::int64_t n : {1, 4, 7}) {
            const std::vector<double> sched(static_cast<std::size_t>(n), gl);
            for (double kappa : {-3.0, -1.0, -0.25}) {
                CHECK(denom_nonconvex_const(gl, kappa, n).denominator
                      >= denom_classical_nesterov(sched) - 1e-9);
            }
            if (gl <= std::sqrt(3.0)) {
                CHECK(denom_nonconvex_const(gl, -1.0, n).denominator
                      >= denom_aps(sched) - 1e-9);
            }
        }
    }
}

TEST_CASE("variable stepsize denominator") {
    // constant short schedule matches the constant-step rate
    const std::vector<double> sched(5, 0.8);
    CHECK(denom_variable(sched, -0.6).denominator
          == doctest::Approx(denom_nonconvex_const(0.8, -0.6, 5).denominator).epsilon(1e-12));
    // kappa = 0: 1 + 2 sum gl_i
    const std::vector<double> mix{0.5, 1.0, 1.5, 1.2};
    CHECK(denom_variable(mix, 0.0).denominator == doctest::Approx(1.0 + 2.0 * 4.2));
    // kappa = -1 at gl = sqrt(3): per-step coefficient matches the
    // smooth-nonconvex rate's
    const double g3 = std::sqrt(3.0);
    CHECK(denom_variable({g3}, -1.0).denominator
          == doctest::Approx(denom_aps({g3})).epsilon(1e-12));
    CHECK_THROWS_AS(denom_variable({1.9}, -1e-3), std::domain_error);
}

TEST_CASE("dynamic schedule denominators") {
    CHECK(denom_dynamic_strongly_convex(0.0, 2).denominator
          == doctest::Approx(7.464).epsilon(5e-4));
    CHECK(denom_dynamic_strongly_convex(1e-3, 5).denominator
          == doctest::Approx(18.784).epsilon(5e-4));
    const double s0 = gamma_bar(1, 0.3);
    CHECK(denom_dynamic_strongly_convex(0.3, 1).denominator
          == doctest::Approx(1.0 + s0 / (2.0 - s0 * 1.3)).epsilon(1e-12));

    CHECK(denom_dynamic_nonconvex(-1e-3, 1).denominator == doctest::Approx(3.994).epsilon(5e-4));
    CHECK(denom_dynamic_nonconvex(-1e-3, 10).denominator
          == doctest::Approx(37.246).epsilon(5e-4));
    CHECK(denom_dynamic_nonconvex(-1e-3, 30).denominator
          == doctest::Approx(112.489).epsilon(5e-4));
}

TEST_CASE("equivalent sum form of the dynamic denominators") {
    for (double kappa : {0.0, 0.2, 1e-3}) {
        for (std::int64_t n : {1, 3, 8}) {
            const StepsizeSchedule s = dynamic_sequence(kappa, n);
            CHECK(denom_conjectured_equivalent(s.entries, kappa)
                  == doctest::Approx(denom_dynamic_strongly_convex(kappa, n).denominator)
                         .epsilon(1e-9));
        }
    }
    for (double kappa : {-1e-3, -0.5, -2.0}) {
        for (std::int64_t n : {1, 5, 12, 30}) {
            const StepsizeSchedule s = truncated_schedule(kappa, n);
            CHECK(denom_conjectured_equivalent(s.entries, kappa)
                  == doctest::Approx(denom_dynamic_nonconvex(kappa, n).denominator)
                         .epsilon(1e-9));
        }
    }
    // single mid-range step: the summand reduces to gl * p
    for (double gl : {1.0, 1.3, 1.6}) {
        const double kappa = -0.4;
        CHECK(denom_conjectured_equivalent({gl}, kappa)
              == doctest::Approx(1.0 + gl * p_coeff(gl, kappa * gl)).epsilon(1e-12));
    }
}

TEST_CASE("dynamic beats the best constant schedule") {
    for (double kappa : {0.0, 1e-3, 1e-4}) {
        for (std::int64_t n : {1, 2, 5, 10, 20}) {
            const double best_const =
                std::pow(1.0 - gamma_bar(n, kappa), -2.0 * static_cast<double>(n));
            CHECK(denom_dynamic_strongly_convex(kappa, n).denominator >= best_const - 1e-9);
        }
    }
    for (std::int64_t n : {1, 2, 5, 10, 30}) {
        const OptNumericResult opt = opt_const_nonconvex_numeric(-1e-3, n);
        CHECK(denom_dynamic_nonconvex(-1e-3, n).denominator >= opt.denominator - 1e-9);
    }
}

TEST_CASE("classical comparison rates") {
    CHECK(denom_classical_nesterov(std::vector<double>(4, 1.0)) == doctest::Approx(5.0));
    const double g = 2.0 / std::sqrt(3.0);
    CHECK(denom_aps({g}) == doctest::Approx(2.539600717839).epsilon(1e-10));
    CHECK(denom_aps({std::sqrt(3.0)})
          == doctest::Approx(1.0 + std::sqrt(3.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("numerator conventions") {
    const RateBound full = denom_convex(1.2, 4);
    const RateBound to_fn = denom_convex(1.2, 4, NumeratorKind::gap_to_fN);
    CHECK(to_fn.denominator == doctest::Approx(full.denominator - 1.0).epsilon(1e-14));
    CHECK(full.denominator > 0.0);
}
