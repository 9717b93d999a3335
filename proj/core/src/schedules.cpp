#include "gdr/schedules.hpp"

#include <cmath>
#include <stdexcept>

#include "gdr/curvature.hpp"
#include "gdr/rates.hpp"
#include "gdr/thresholds.hpp"

namespace gdr {

namespace {

// Balance cubic whose root in [1, gamma_bar_inf) is the next dynamic step:
//   -k*A*s^3 + 2(1+k)*A*s^2 + 2[-3 + 2*sk*(1+k)]*s - 2*sk,  A = 2 - sk(1+k).
// Strictly increasing on the bracket, h(1) = -(1-k)(2-k*sk) < 0.
double balance_cubic(double s, double sk, double kappa) {
    const double a = 2.0 - sk * (1.0 + kappa);
    return -kappa * a * s * s * s + 2.0 * (1.0 + kappa) * a * s * s
         + 2.0 * (-3.0 + 2.0 * sk * (1.0 + kappa)) * s - 2.0 * sk;
}

double next_dynamic(double sk, double kappa) {
    if (kappa == 0.0)  // closed form, quadratic case
        return (3.0 - 2.0 * sk + std::sqrt(9.0 - 4.0 * sk)) / (2.0 * (2.0 - sk));
    // for kappa > 0 the sequence converges geometrically; once it sits at the
    // limit to machine precision the bracket degenerates
    if (gamma_bar_inf(kappa) - sk <= 1e-11) return sk;
    double lo = 1.0;
    double hi = gamma_bar_inf(kappa) - 1e-14;
    if (!(balance_cubic(lo, sk, kappa) < 0.0) || !(balance_cubic(hi, sk, kappa) > 0.0))
        throw std::runtime_error("dynamic_sequence: root not bracketed");
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        if (balance_cubic(mid, sk, kappa) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (hi - lo > 1e-12) throw std::runtime_error("dynamic_sequence: no convergence");
    return 0.5 * (lo + hi);
}

}  // namespace

double opt_const_convex(std::int64_t n) {
    if (n < 1) throw std::domain_error("opt_const_convex: n must be >= 1");
    return gamma_bar(n, 0.0);
}

double opt_const_strongly_convex(double kappa, std::int64_t n) {
    if (n < 1) throw std::domain_error("opt_const_strongly_convex: n must be >= 1");
    if (!(kappa > 0.0) || !(kappa < 1.0))
        throw std::domain_error("opt_const_strongly_convex: kappa must lie in (0, 1)");
    return gamma_bar(n, kappa);
}

double opt_const_nonconvex_asymptotic(double kappa) {
    if (!(kappa < 0.0))
        throw std::domain_error("opt_const_nonconvex_asymptotic: kappa must be < 0");
    auto cubic = [kappa](double l) {
        return -kappa * (1.0 + kappa) * l * l * l
             + (3.0 * kappa + (1.0 + kappa) * (1.0 + kappa)) * l * l
             - 4.0 * (1.0 + kappa) * l + 4.0;
    };
    // cubic(1) = 1 algebraically; it may cancel to ~0 for very large |kappa|
    double lo = 1.0;
    double hi = 2.0 - 1e-14;
    if (!(cubic(lo) >= 0.0) || !(cubic(hi) < 0.0))
        throw std::runtime_error("opt_const_nonconvex_asymptotic: root not bracketed");
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        double mid = 0.5 * (lo + hi);
        if (cubic(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double kappa_bar() {
    const double r5 = std::sqrt(5.0);
    return (-9.0 - 5.0 * r5 + std::sqrt(190.0 + 90.0 * r5)) / 4.0;
}

StepsizeSchedule dynamic_sequence(double kappa, std::int64_t n) {
    if (n < 1) throw std::domain_error("dynamic_sequence: n must be >= 1");
    if (!(kappa < 1.0)) throw std::domain_error("dynamic_sequence: kappa must be < 1");
    StepsizeSchedule s;
    s.kind = ScheduleKind::dynamic;
    s.entries.reserve(static_cast<std::size_t>(n));
    double prev = 0.0;  // s_{-1}
    for (std::int64_t i = 0; i < n; ++i) {
        prev = next_dynamic(prev, kappa);
        s.entries.push_back(prev);
    }
    return s;
}

StepsizeSchedule truncated_schedule(double kappa, std::int64_t n) {
    if (!(kappa < 0.0)) throw std::domain_error("truncated_schedule: kappa must be < 0");
    const double gstar = opt_const_nonconvex_asymptotic(kappa);
    StepsizeSchedule s = dynamic_sequence(kappa, n);
    s.kind = ScheduleKind::truncated_dynamic;
    for (double& e : s.entries) e = std::min(e, gstar);
    return s;
}

OptNumericResult opt_const_nonconvex_numeric(double kappa, std::int64_t n) {
    if (n < 1) throw std::domain_error("opt_const_nonconvex_numeric: n must be >= 1");
    if (!(kappa < 0.0))
        throw std::domain_error("opt_const_nonconvex_numeric: kappa must be < 0");
    auto value = [&](double gl) { return denom_nonconvex_const(gl, kappa, n).denominator; };
    // golden section per threshold cell; the cells are edge-maximal near the
    // optimum, so endpoints are compared explicitly
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    OptNumericResult best{1.0, value(1.0)};
    double left = 1.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double right = gamma_bar(k, kappa) - 1e-12;
        double a = left, b = right;
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        double fc = value(c), fd = value(d);
        while (b - a > 1e-10) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - invphi * (b - a);
                fc = value(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + invphi * (b - a);
                fd = value(d);
            }
        }
        for (double cand : {left, right, 0.5 * (a + b)}) {
            double v = value(cand);
            if (v > best.denominator) best = {cand, v};
        }
        left = right + 1e-12;  // next cell starts at the threshold
    }
    return best;
}

}  // namespace gdr
