#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "gdr/engine.hpp"
#include "gdr/rates.hpp"
#include "gdr/thresholds.hpp"
#include "gdr/worstcase.hpp"

using namespace gdr;

TEST_CASE("run_gd on the scalar quadratic") {
    CurvatureClass cls(0.0, 1.0);
    Oracle q = [](const Vec& x) -> std::pair<double, Vec> {
        return {0.5 * x[0] * x[0], {x[0]}};
    };
    StepsizeSchedule half{std::vector<double>(3, 0.5), ScheduleKind::constant};
    Trajectory t = run_gd(q, {1.0}, half, cls);
    REQUIRE(t.triplets.size() == 4);
    CHECK(t.triplets[1].x[0] == doctest::Approx(0.5));
    CHECK(t.triplets[2].x[0] == doctest::Approx(0.25));

    StepsizeSchedule unit{{1.0}, ScheduleKind::constant};
    Trajectory t1 = run_gd(q, {1.0}, unit, cls);
    CHECK(t1.triplets[1].g[0] == doctest::Approx(0.0));  // converges in one step

    StepsizeSchedule bad{{2.0}, ScheduleKind::constant};
    CHECK_THROWS_AS(run_gd(q, {1.0}, bad, cls), std::domain_error);
}

TEST_CASE("performance metric and ratio") {
    CurvatureClass cls(-0.5, 1.0);
    WorstCaseInstance inst = wc_nonconvex_mid(cls, 1.5, 5, 1.0);
    Trajectory t = trajectory_of(inst);
    const FStarResult fs = f_star_of(t.triplets, cls);
    const Performance perf = performance(t, fs.f_star);
    const RateBound rb = denom_nonconvex_const(1.5, -0.5, 5);
    CHECK(perf.ratio_to_bound(rb) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sufficient decrease holds along every run") {
    std::mt19937 rng(19);
    for (double kappa : {-1.0, 0.0, 0.4}) {
        CurvatureClass cls = CurvatureClass::from_kappa(kappa);
        std::uniform_real_distribution<double> dgl(0.1, 1.9);
        std::uniform_real_distribution<double> dl(std::max(kappa, 0.0), 1.0);
        std::uniform_real_distribution<double> dx(-2.0, 2.0);
        for (int trial = 0; trial < 50; ++trial) {
            Vec lambda{dl(rng), dl(rng), dl(rng)};
            Oracle q = [lambda](const Vec& x) -> std::pair<double, Vec> {
                double f = 0.0;
                Vec g(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) {
                    f += 0.5 * lambda[i] * x[i] * x[i];
                    g[i] = lambda[i] * x[i];
                }
                return {f, g};
            };
            StepsizeSchedule sched{std::vector<double>(5, dgl(rng)), ScheduleKind::constant};
            Trajectory t = run_gd(q, {dx(rng), dx(rng), dx(rng)}, sched, cls);
            // f_i - f* >= |g_i|^2/(2L) at every iterate (f* = 0 here)
            for (const Triplet& tri : t.triplets.items)
                CHECK(tri.f >= norm2(tri.g) / (2.0 * cls.l_upper) - 1e-12);
            // gradient norms never increase on convex instances
            if (kappa >= 0.0) {
                for (std::size_t i = 0; i + 1 < t.triplets.size(); ++i)
                    CHECK(norm2(t.triplets[i + 1].g) <= norm2(t.triplets[i].g) + 1e-12);
            }
        }
    }
}

TEST_CASE("replay validation") {
    CurvatureClass cls(-0.5, 1.0);
    WorstCaseInstance inst = wc_nonconvex_mid(cls, 1.5, 4, 1.0);
    CHECK_NOTHROW(trajectory_of(inst));
    // corrupt one stored point
    WorstCaseInstance bad = inst;
    std::get<TripletSet>(bad.payload).items[2].x[0] += 1e-6;
    CHECK_THROWS_AS(trajectory_of(bad), std::invalid_argument);
}

TEST_CASE("tightness reports across regimes") {
    // strongly convex mu-branch
    TightnessReport sc = tightness_report(CurvatureClass(0.1, 1.0), 0.5, 4, 1.0);
    CHECK(sc.ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sc.interpolable);
    CHECK_FALSE(sc.conjectured);

    // figure setup: sublinear_0, ratio 1
    TightnessReport mid = tightness_report(CurvatureClass(-0.5, 1.0), 1.5, 7, 1.0);
    CHECK(mid.ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mid.regime == "sublinear_0");

    // deep stepsize: the linear regime
    CHECK(gamma_bar(4, -0.5) <= 1.95);
    TightnessReport lin = tightness_report(CurvatureClass(-0.5, 1.0), 1.95, 4, 1.0);
    CHECK(lin.regime == "linear_L");
    CHECK(lin.ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("no quadratic beats the bound") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dx(-2.0, 2.0);
    for (double kappa : {0.3, 0.0, -0.5}) {
        CurvatureClass cls = CurvatureClass::from_kappa(kappa);
        std::uniform_real_distribution<double> dl(std::max(kappa, 0.0), 1.0);
        std::uniform_real_distribution<double> dgl(0.1, 1.9);
        for (int trial = 0; trial < 100; ++trial) {
            Vec lambda{dl(rng), dl(rng), dl(rng)};
            Oracle q = [lambda](const Vec& x) -> std::pair<double, Vec> {
                double f = 0.0;
                Vec g(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) {
                    f += 0.5 * lambda[i] * x[i] * x[i];
                    g[i] = lambda[i] * x[i];
                }
                return {f, g};
            };
            const double gl = dgl(rng);
            const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 5);
            StepsizeSchedule sched{std::vector<double>(static_cast<std::size_t>(n), gl),
                                   ScheduleKind::constant};
            Trajectory t = run_gd(q, {dx(rng), dx(rng), dx(rng)}, sched, cls);
            if (t.triplets[0].f <= 1e-12) continue;  // started at the minimum
            const Performance perf = performance(t, 0.0);
            CHECK(perf.ratio_to_bound(denom_for(gl, kappa, n)) <= 1.0 + 1e-9);
        }
    }
}
