#include "gdr/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "gdr/curvature.hpp"

namespace gdr {

double gamma_bar_inf(double kappa) {
    if (!(kappa < 1.0)) throw std::domain_error("gamma_bar_inf: kappa must be < 1");
    return 2.0 / (1.0 + std::max(kappa, 0.0));
}

double gamma_bar(std::int64_t k, double kappa, double tol) {
    if (k < 0) throw std::domain_error("gamma_bar: k must be nonnegative");
    if (!(kappa < 1.0)) throw std::domain_error("gamma_bar: kappa must be < 1");
    if (!(tol > 0.0)) throw std::domain_error("gamma_bar: tol must be positive");
    if (k == 0) return 1.0;
    if (k == 1) return 3.0 / (1.0 + kappa + std::sqrt(1.0 - kappa + kappa * kappa));

    double lo = 1.0 + 1e-12;
    double hi = gamma_bar_inf(kappa) - 1e-12;
    // T_k -> -inf as gl -> 1+ and T_k > 0 near gamma_bar_inf; monotone in gl
    if (!(t_k(lo, kappa, k) < 0.0) || !(t_k(hi, kappa, k) > 0.0))
        throw std::runtime_error("gamma_bar: root not bracketed");
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (t_k(mid, kappa, k) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    if (hi - lo > 10.0 * tol) throw std::runtime_error("gamma_bar: bisection did not converge");
    return hi;  // T_k(hi) >= 0, so the root is counted in its own cell
}

std::int64_t n_bar(double gl, double kappa, std::int64_t k_max) {
    if (k_max < 1) throw std::domain_error("n_bar: k_max must be >= 1");
    if (gl <= 1.0) return 0;  // every T_k, k >= 1, is negative below gl = 1
    std::int64_t nb = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        if (t_k(gl, kappa, k) >= 0.0) nb = k;
    }
    return nb;
}

ThresholdTable threshold_table(double kappa, std::int64_t k_max) {
    if (k_max < 1) throw std::domain_error("threshold_table: k_max must be >= 1");
    ThresholdTable table{kappa, {}, gamma_bar_inf(kappa)};
    double prev = 1.0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        double g = gamma_bar(k, kappa);
        if (!(g > prev) || !(g < table.gamma_bar_inf))
            throw std::runtime_error("threshold_table: monotonicity violated");
        table.values.emplace_back(k, g);
        prev = g;
    }
    return table;
}

}  // namespace gdr
