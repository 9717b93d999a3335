#pragma once

#include <cstdint>
#include <vector>

namespace gdr {

enum class ScheduleKind { constant, dynamic, truncated_dynamic, custom };

struct StepsizeSchedule {
    std::vector<double> entries;  // normalized stepsizes gamma_i * L
    ScheduleKind kind = ScheduleKind::custom;
};

// Optimal constant stepsizes: gamma_bar_N for (strongly) convex classes.
double opt_const_convex(std::int64_t n);
double opt_const_strongly_convex(double kappa, std::int64_t n);

// Asymptotically optimal constant stepsize for kappa < 0: unique root in
// [1, 2) of -k(1+k)l^3 + [3k+(1+k)^2]l^2 - 4(1+k)l + 4 = 0.
double opt_const_nonconvex_asymptotic(double kappa);

// Curvature ratio below which the asymptotic optimum is exact for every N.
double kappa_bar();

// Dynamic sequence s_0..s_{n-1} with s_{-1} = 0; each next entry is the
// unique root in [1, gamma_bar_inf) of the balance cubic.
StepsizeSchedule dynamic_sequence(double kappa, std::int64_t n);

// Entrywise min of the dynamic sequence and the asymptotic optimum.
StepsizeSchedule truncated_schedule(double kappa, std::int64_t n);

struct OptNumericResult {
    double gl;           // arg max of the nonconvex denominator over [1, gamma_bar_N)
    double denominator;  // value attained
};

// Numeric maximization of denom_nonconvex_const over the threshold cells.
OptNumericResult opt_const_nonconvex_numeric(double kappa, std::int64_t n);

}  // namespace gdr
