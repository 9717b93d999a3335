#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gdr {

enum class RegimeKind { sublinear, linear_L, linear_mu, one_step, dynamic_schedule };

struct Regime {
    RegimeKind kind;
    std::int64_t k = 0;  // cell index for sublinear regimes

    std::string label() const;
};

enum class NumeratorKind { gap_to_fstar, gap_to_fN };

// A worst-case bound gap / denominator on the performance metric
// min_i ||g_i||^2 / (2L). The gap_to_fN convention drops the leading 1.
struct RateBound {
    double denominator;
    Regime regime;
    NumeratorKind numerator = NumeratorKind::gap_to_fstar;

    double bound(double gap) const { return gap / denominator; }
};

// The three equivalent forms of P_N for the nonconvex constant-step rate.
// gm = kappa * gl with kappa < 0.
double p_n_sum(double gl, double gm, std::int64_t n);
double p_n_min(double gl, double gm, std::int64_t n);
double p_n_piecewise(double gl, double gm, std::int64_t n);

RateBound denom_convex(double gl, std::int64_t n,
                       NumeratorKind num = NumeratorKind::gap_to_fstar);
RateBound denom_strongly_convex(double gl, double kappa, std::int64_t n,
                                NumeratorKind num = NumeratorKind::gap_to_fstar);
RateBound denom_nonconvex_const(double gl, double kappa, std::int64_t n,
                                NumeratorKind num = NumeratorKind::gap_to_fstar);

// Variable stepsizes gl_i in (0, gamma_bar_1(kappa)], kappa <= 0.
RateBound denom_variable(const std::vector<double>& gls, double kappa,
                         NumeratorKind num = NumeratorKind::gap_to_fstar);

// Dynamic schedules s_k(kappa); kappa in [0,1) resp. kappa < 0.
RateBound denom_dynamic_strongly_convex(double kappa, std::int64_t n);
RateBound denom_dynamic_nonconvex(double kappa, std::int64_t n);

// 1 + sum gl(2-gl)(2-kappa*gl) / (2-gl(1+kappa)); equals the dynamic
// denominators on the dynamic / truncated schedules.
double denom_conjectured_equivalent(const std::vector<double>& gls, double kappa);

// Classical comparison rates.
double denom_classical_nesterov(const std::vector<double>& gls);
double denom_aps(const std::vector<double>& gls);

// Uniform dispatch on the sign of kappa (constant stepsize).
RateBound denom_for(double gl, double kappa, std::int64_t n,
                    NumeratorKind num = NumeratorKind::gap_to_fstar);

}  // namespace gdr
