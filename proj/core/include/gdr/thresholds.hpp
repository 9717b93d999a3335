#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gdr {

// Upper limit of the threshold sequence: 2 / (1 + [kappa]_+).
double gamma_bar_inf(double kappa);

// k-th stepsize threshold: the unique root of T_k in (1, gamma_bar_inf).
// k = 0 returns 1 by convention; k = 1 uses the closed form
// 3 / (1 + kappa + sqrt(1 - kappa + kappa^2)); k >= 2 bisects T_k.
// The returned value satisfies T_k(value) >= 0.
double gamma_bar(std::int64_t k, double kappa, double tol = 1e-13);

// Largest k <= k_max with T_k(gl) >= 0; 0 when T_1 < 0 (and for gl <= 1).
std::int64_t n_bar(double gl, double kappa, std::int64_t k_max);

struct ThresholdTable {
    double kappa;
    std::vector<std::pair<std::int64_t, double>> values;  // (k, gamma_bar_k), k = 1..k_max
    double gamma_bar_inf;
};

// Tabulates gamma_bar for k = 1..k_max and validates strict monotonicity.
ThresholdTable threshold_table(double kappa, std::int64_t k_max);

}  // namespace gdr
