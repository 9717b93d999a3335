#include "gdr/curvature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gdr {

namespace {
constexpr std::int64_t kMaxIndex = 1000000;
}

CurvatureClass::CurvatureClass(double mu_, double l_upper_) : mu(mu_), l_upper(l_upper_) {
    if (!(l_upper > 0.0)) throw std::domain_error("CurvatureClass: L must be positive");
    if (!(mu < l_upper)) throw std::domain_error("CurvatureClass: requires mu < L");
    kappa = mu / l_upper;
    if (!(kappa < 1.0)) throw std::domain_error("CurvatureClass: kappa must be < 1");
}

CurvatureClass CurvatureClass::from_kappa(double kappa_, double l_upper_) {
    CurvatureClass cls(kappa_ * l_upper_, l_upper_);
    if (std::abs(cls.kappa - kappa_) > 1e-12 * (1.0 + std::abs(kappa_)))
        throw std::logic_error("CurvatureClass: inconsistent kappa");
    return cls;
}

double CurvatureClass::lipschitz() const { return std::max(-mu, l_upper); }

NormalizedStep::NormalizedStep(double gl_, const CurvatureClass& cls)
    : gl(gl_), gm(cls.kappa * gl_), rho(1.0 - gl_), eta(1.0 - cls.kappa * gl_) {
    if (!(gl > 0.0) || !(gl < 2.0))
        throw std::domain_error("NormalizedStep: gl must lie in (0, 2)");
}

double pow_int(double x, std::int64_t n) {
    if (n < 0) return pow_int(1.0 / x, -n);
    double r = 1.0;
    double b = x;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

double e_k(double x, std::int64_t k) {
    if (x == 0.0) throw std::domain_error("e_k: x must be nonzero");
    if (k < 1) throw std::domain_error("e_k: k must be a positive integer");
    if (k > kMaxIndex) throw std::domain_error("e_k: index cap exceeded");
    if (std::abs(1.0 - x) <= 1e-8) {
        // direct sum; the geometric form cancels catastrophically near x = 1
        double inv = 1.0 / x;
        double term = 1.0;
        double s = 0.0;
        for (std::int64_t j = 0; j < 2 * k; ++j) {
            term *= inv;
            s += term;
        }
        return s;
    }
    return (-1.0 + pow_int(1.0 / x, 2 * k)) / (1.0 - x);
}

double t_k(double gl, double kappa, std::int64_t k) {
    if (k == 0) return 0.0;  // empty sum convention
    if (gl == 1.0) throw std::domain_error("t_k: gl = 1 is outside the domain for k >= 1");
    if (!(gl > 0.0)) throw std::domain_error("t_k: gl must be positive");
    const double a = e_k(1.0 - kappa * gl, k);
    const double b = e_k(1.0 - gl, k);
    if (std::isinf(a) && std::isinf(b) && a == b) {
        // both exponentials overflowed (kappa > 0, huge k); compare the
        // dominant terms eta^{-2k}/(kappa*gl) vs |rho|^{-2k}/gl in logs
        const double la = -2.0 * k * std::log(std::abs(1.0 - kappa * gl))
                        - std::log(kappa * gl);
        const double lb = -2.0 * k * std::log(std::abs(1.0 - gl)) - std::log(gl);
        if (la == lb) return 0.0;
        return la > lb ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
    }
    return a - b;
}

double p_coeff(double l, double u) {
    if (!(l > 0.0) || !(l < 2.0)) throw std::domain_error("p_coeff: l must lie in (0, 2)");
    if (!(u < l)) throw std::domain_error("p_coeff: requires u < l");
    if (!(2.0 - l - u > 0.0))
        throw std::domain_error("p_coeff: step beyond gamma_bar_inf (2 - l - u <= 0)");
    return 2.0 - (-l * u) / (1.0 - u - std::abs(1.0 - l));
}

}  // namespace gdr
