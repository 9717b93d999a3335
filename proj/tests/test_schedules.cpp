#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gdr/curvature.hpp"
#include "gdr/rates.hpp"
#include "gdr/schedules.hpp"
#include "gdr/thresholds.hpp"

using namespace gdr;

TEST_CASE("optimal constant stepsizes delegate to the thresholds") {
    CHECK(opt_const_convex(10) == doctest::Approx(1.834).epsilon(5e-4));
    CHECK(opt_const_strongly_convex(1e-4, 50) == doctest::Approx(1.949).epsilon(5e-4));
    CHECK(opt_const_convex(1) == 1.5);
    CHECK_THROWS_AS(opt_const_strongly_convex(-0.1, 3), std::domain_error);
}

TEST_CASE("asymptotic nonconvex optimum") {
    CHECK(opt_const_nonconvex_asymptotic(-1.0)
          == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(opt_const_nonconvex_asymptotic(-1e-3) == doctest::Approx(1.939).epsilon(5e-4));
    CHECK(std::abs(opt_const_nonconvex_asymptotic(-1e9) - 1.0) < 1e-4);
    CHECK_THROWS_AS(opt_const_nonconvex_asymptotic(0.0), std::domain_error);
}

TEST_CASE("kappa_bar") {
    const double kb = kappa_bar();
    CHECK(kb == doctest::Approx(-0.1001).epsilon(5e-4));
    CHECK(kb < 0.0);
    // kappa_bar is where the asymptotic optimum crosses gamma_bar_1
    CHECK(opt_const_nonconvex_asymptotic(kb)
          == doctest::Approx(gamma_bar(1, kb)).epsilon(1e-9));
}

TEST_CASE("dynamic sequence values") {
    const StepsizeSchedule s0 = dynamic_sequence(0.0, 2);
    CHECK(s0.entries[0] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(s0.entries[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(dynamic_sequence(1e-3, 10).entries[9] == doctest::Approx(1.946).epsilon(5e-4));
    for (double kappa : {-2.0, -0.3, 0.0, 0.4}) {
        CHECK(dynamic_sequence(kappa, 1).entries[0]
              == doctest::Approx(gamma_bar(1, kappa)).epsilon(1e-11));
    }
}

TEST_CASE("dynamic sequence: increasing, bounded, balanced") {
    for (double kappa : {-1.0, 0.0, 0.5}) {
        const StepsizeSchedule s = dynamic_sequence(kappa, 500);
        const double ginf = gamma_bar_inf(kappa);
        double prev = 0.0;
        for (double e : s.entries) {
            // strictly increasing until it saturates at the limit in double
            if (ginf - prev > 1e-10)
                CHECK(e > prev);
            else
                CHECK(e >= prev);
            CHECK(e < ginf);
            prev = e;
        }
        CHECK(std::abs(s.entries.back() - ginf) < 1e-2);
        // defining balance residual, away from the saturated tail where the
        // fractions reach 1/ulp scale
        for (std::size_t k = 0; k + 1 < 20; ++k) {
            const double sk = s.entries[k];
            const double sp = s.entries[k + 1];
            if (ginf - sp <= 5e-3) break;  // the fraction amplifies ulp(s) by 2/A^2
            const double res = sp * ((2.0 - sp) * (2.0 - kappa * sp) - 1.0)
                                   / (2.0 - sp * (1.0 + kappa))
                             + sk / (2.0 - sk * (1.0 + kappa));
            CHECK(std::abs(res) < 1e-10);
        }
    }
}

TEST_CASE("truncated schedule") {
    const StepsizeSchedule t = truncated_schedule(-1e-3, 10);
    CHECK(t.entries.back() == doctest::Approx(1.939).epsilon(5e-4));
    const StepsizeSchedule t5 = truncated_schedule(-1e-3, 5);
    CHECK(t5.entries.back() == doctest::Approx(1.893).epsilon(5e-4));  // below gstar
    // near-convex curvatures barely truncate: gstar tends to 2
    CHECK(opt_const_nonconvex_asymptotic(-1e-9) > 1.999);
    for (std::size_t i = 1; i < t.entries.size(); ++i)
        CHECK(t.entries[i] >= t.entries[i - 1]);
}

TEST_CASE("numeric optimum over the threshold cells") {
    const OptNumericResult r2 = opt_const_nonconvex_numeric(-1e-3, 2);
    CHECK(r2.gl == doctest::Approx(1.606).epsilon(5e-4));
    CHECK(r2.denominator == doctest::Approx(7.400).epsilon(5e-4));
    const OptNumericResult r50 = opt_const_nonconvex_numeric(-1e-3, 50);
    CHECK(r50.gl == doctest::Approx(1.905).epsilon(5e-4));
    // below kappa_bar the optimum is N-independent and equals the asymptotic one
    for (double kappa : {-0.2, -1.0}) {
        const double gstar = opt_const_nonconvex_asymptotic(kappa);
        for (std::int64_t n : {1, 3, 6, 12}) {
            CHECK(opt_const_nonconvex_numeric(kappa, n).gl
                  == doctest::Approx(gstar).epsilon(1e-6));
        }
    }
}

TEST_CASE("asymptotic optimum increases with kappa") {
    double prev = 0.0;
    for (double kappa : {-100.0, -10.0, -2.0, -1.0, -0.5, -0.2, -0.05, -1e-3}) {
        const double g = opt_const_nonconvex_asymptotic(kappa);
        CHECK(g > prev);
        prev = g;
    }
}
