#include "gdr/rates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gdr/curvature.hpp"
#include "gdr/schedules.hpp"
#include "gdr/thresholds.hpp"

namespace gdr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOne = 1e-10;  // |1 - gl| below this: exponential branch is +inf

// (-1 + (1-gl)^{-2n}) / gl, the linear-regime argument; +inf at gl = 1.
double lin_term(double gl, std::int64_t n) {
    if (std::abs(1.0 - gl) < kOne) return kInf;
    return (-1.0 + pow_int(1.0 / (1.0 - gl), 2 * n)) / gl;
}

void check_gl(double gl) {
    if (!(gl > 0.0) || !(gl < 2.0)) throw std::domain_error("rate: gl must lie in (0, 2)");
}

void check_n(std::int64_t n) {
    if (n < 1) throw std::domain_error("rate: n must be >= 1");
}

double adjust(double denom, NumeratorKind num) {
    return num == NumeratorKind::gap_to_fN ? denom - 1.0 : denom;
}

// transient term of the piecewise/min forms at index k >= 1
double transient(double gl, double gm, std::int64_t k) {
    const double rho2 = (1.0 - gl) * (1.0 - gl);
    const double eta2 = (1.0 - gm) * (1.0 - gm);
    const double num = (-1.0 + pow_int(1.0 / (1.0 - gl), 2 * k)) / (gl * (1.0 - rho2))
                     - (-1.0 + pow_int(1.0 / (1.0 - gm), 2 * k)) / (gm * (1.0 - eta2));
    return num / (1.0 / gl - 1.0 / gm);
}

}  // namespace

std::string Regime::label() const {
    switch (kind) {
        case RegimeKind::sublinear: return "sublinear_" + std::to_string(k);
        case RegimeKind::linear_L: return "linear_L";
        case RegimeKind::linear_mu: return "linear_mu";
        case RegimeKind::one_step: return "one_step";
        case RegimeKind::dynamic_schedule: return "dynamic";
    }
    return "unknown";
}

double p_n_sum(double gl, double gm, std::int64_t n) {
    check_gl(gl);
    check_n(n);
    if (!(gm <= 0.0)) throw std::domain_error("p_n: requires gm <= 0");
    const double p = p_coeff(gl, gm);
    double s = 0.0;
    if (std::abs(1.0 - gl) >= kOne) {
        const double kappa = gm / gl;
        for (std::int64_t k = 1; k <= n; ++k) {
            double tk = t_k(gl, kappa, k);
            if (tk > 0.0) s += tk;
        }
    }
    // at gl = 1 every T_k, k >= 1, clips to zero
    return p * (n - (-gl * gm / (gl - gm)) * s);
}

double p_n_min(double gl, double gm, std::int64_t n) {
    check_gl(gl);
    check_n(n);
    if (!(gm <= 0.0)) throw std::domain_error("p_n: requires gm <= 0");
    if (gm == 0.0) return 2.0 * static_cast<double>(n);
    double best = static_cast<double>(n);  // k = 0
    if (std::abs(1.0 - gl) >= kOne) {
        for (std::int64_t k = 1; k <= n; ++k) {
            double val = transient(gl, gm, k) + static_cast<double>(n - k);
            if (val < best) best = val;
        }
    }
    return p_coeff(gl, gm) * best;
}

double p_n_piecewise(double gl, double gm, std::int64_t n) {
    check_gl(gl);
    check_n(n);
    if (!(gm <= 0.0)) throw std::domain_error("p_n: requires gm <= 0");
    if (gm == 0.0) return 2.0 * static_cast<double>(n);
    if (gl <= 1.0) return (2.0 + gl * gm / (gl - gm)) * n;
    const double kappa = gm / gl;
    const std::int64_t nb = std::min(n_bar(gl, kappa, n), n);
    if (nb == 0) return p_coeff(gl, gm) * n;
    const double rho2 = (1.0 - gl) * (1.0 - gl);
    const double eta2 = (1.0 - gm) * (1.0 - gm);
    const double trans =
        ((-1.0 + pow_int(1.0 / (1.0 - gl), 2 * nb)) / (gl * (1.0 - rho2))
         - (-1.0 + pow_int(1.0 / (1.0 - gm), 2 * nb)) / (gm * (1.0 - eta2)))
        / (1.0 / (1.0 - rho2) - 1.0 / (1.0 - eta2));
    return (2.0 - gl) * (2.0 - gm) / (2.0 - gl - gm) * static_cast<double>(n - nb) + trans;
}

RateBound denom_convex(double gl, std::int64_t n, NumeratorKind num) {
    check_gl(gl);
    check_n(n);
    const double sub = 2.0 * static_cast<double>(n);
    const double lin = lin_term(gl, n);
    RateBound rb;
    if (sub <= lin) {
        rb.regime = {RegimeKind::sublinear, gl > 1.0 ? n_bar(gl, 0.0, n) : 0};
        rb.denominator = adjust(1.0 + gl * sub, num);
    } else {
        rb.regime = {RegimeKind::linear_L, 0};
        rb.denominator = adjust(1.0 + gl * lin, num);
    }
    rb.numerator = num;
    return rb;
}

RateBound denom_strongly_convex(double gl, double kappa, std::int64_t n, NumeratorKind num) {
    check_gl(gl);
    check_n(n);
    if (!(kappa > 0.0) || !(kappa < 1.0))
        throw std::domain_error("denom_strongly_convex: kappa must lie in (0, 1)");
    const double gm = kappa * gl;
    const double mu_branch =
        std::abs(1.0 - gm) < kOne ? kInf : (-1.0 + pow_int(1.0 / (1.0 - gm), 2 * n)) / gm;
    const double lin = lin_term(gl, n);
    RateBound rb;
    rb.numerator = num;
    if (mu_branch <= lin) {
        rb.regime = {RegimeKind::linear_mu, 0};
        rb.denominator = adjust(1.0 + gl * mu_branch, num);
    } else {
        rb.regime = {RegimeKind::linear_L, 0};
        rb.denominator = adjust(1.0 + gl * lin, num);
    }
    return rb;
}

RateBound denom_nonconvex_const(double gl, double kappa, std::int64_t n, NumeratorKind num) {
    check_gl(gl);
    check_n(n);
    if (!(kappa < 0.0)) throw std::domain_error("denom_nonconvex_const: kappa must be < 0");
    const double gm = kappa * gl;
    const double pn = p_n_sum(gl, gm, n);
    const double lin = lin_term(gl, n);
    RateBound rb;
    rb.numerator = num;
    if (pn <= lin) {
        rb.regime = {RegimeKind::sublinear, gl > 1.0 ? n_bar(gl, kappa, n) : 0};
        rb.denominator = adjust(1.0 + gl * pn, num);
    } else {
        rb.regime = {RegimeKind::linear_L, 0};
        rb.denominator = adjust(1.0 + gl * lin, num);
    }
    return rb;
}

RateBound denom_variable(const std::vector<double>& gls, double kappa, NumeratorKind num) {
    if (gls.empty()) throw std::domain_error("denom_variable: empty schedule");
    if (!(kappa <= 0.0)) throw std::domain_error("denom_variable: kappa must be <= 0");
    const double g1 = gamma_bar(1, kappa);
    double s = 0.0;
    for (double gl : gls) {
        if (!(gl > 0.0) || gl > g1 + 1e-12)
            throw std::domain_error("denom_variable: stepsize outside (0, gamma_bar_1]");
        s += gl * p_coeff(gl, kappa * gl);
    }
    return {adjust(1.0 + s, num), {RegimeKind::one_step, 0}, num};
}

RateBound denom_dynamic_strongly_convex(double kappa, std::int64_t n) {
    check_n(n);
    if (!(kappa >= 0.0) || !(kappa < 1.0))
        throw std::domain_error("denom_dynamic_strongly_convex: kappa must lie in [0, 1)");
    StepsizeSchedule s = dynamic_sequence(kappa, n);
    const double last = s.entries.back();
    double d = 1.0 + last / (2.0 - last * (1.0 + kappa));
    return {d, {RegimeKind::dynamic_schedule, 0}, NumeratorKind::gap_to_fstar};
}

RateBound denom_dynamic_nonconvex(double kappa, std::int64_t n) {
    check_n(n);
    if (!(kappa < 0.0)) throw std::domain_error("denom_dynamic_nonconvex: kappa must be < 0");
    const double gstar = opt_const_nonconvex_asymptotic(kappa);
    StepsizeSchedule s = dynamic_sequence(kappa, n);
    // telescoped form: the balance cancels every gradient weight up to the
    // truncation index, the constant tail contributes r(gstar) per step
    std::int64_t cut = n;  // first index with s_i > gstar
    for (std::int64_t i = 0; i < n; ++i) {
        if (s.entries[static_cast<std::size_t>(i)] > gstar) {
            cut = i;
            break;
        }
    }
    double d;
    if (cut == n) {
        const double last = s.entries.back();
        d = 1.0 + last / (2.0 - last * (1.0 + kappa));
    } else {
        const double sN = cut == 0 ? 0.0 : s.entries[static_cast<std::size_t>(cut - 1)];
        const double head = sN / (2.0 - sN * (1.0 + kappa));
        const double tail = gstar * p_coeff(gstar, kappa * gstar);
        d = 1.0 + head + static_cast<double>(n - cut) * tail;
    }
    return {d, {RegimeKind::dynamic_schedule, 0}, NumeratorKind::gap_to_fstar};
}

double denom_conjectured_equivalent(const std::vector<double>& gls, double kappa) {
    if (gls.empty()) throw std::domain_error("denom_conjectured_equivalent: empty schedule");
    double s = 0.0;
    for (double gl : gls) {
        const double den = 2.0 - gl * (1.0 + kappa);
        if (!(den > 0.0))
            throw std::domain_error("denom_conjectured_equivalent: step beyond gamma_bar_inf");
        s += gl * (2.0 - gl) * (2.0 - kappa * gl) / den;
    }
    return 1.0 + s;
}

double denom_classical_nesterov(const std::vector<double>& gls) {
    double s = 0.0;
    for (double gl : gls) {
        if (!(gl > 0.0) || !(gl < 2.0))
            throw std::domain_error("denom_classical_nesterov: gl must lie in (0, 2)");
        s += gl * (2.0 - gl);
    }
    return 1.0 + s;
}

double denom_aps(const std::vector<double>& gls) {
    double s = 0.0;
    const double cap = std::sqrt(3.0) + 1e-12;
    for (double gl : gls) {
        if (!(gl > 0.0) || gl > cap)
            throw std::domain_error("denom_aps: gl must lie in (0, sqrt(3)]");
        s += gl * (2.0 - 0.5 * gl * std::max(1.0, gl));
    }
    return 1.0 + s;
}

RateBound denom_for(double gl, double kappa, std::int64_t n, NumeratorKind num) {
    if (kappa > 0.0) return denom_strongly_convex(gl, kappa, n, num);
    if (kappa == 0.0) return denom_convex(gl, n, num);
    return denom_nonconvex_const(gl, kappa, n, num);
}

}  // namespace gdr
