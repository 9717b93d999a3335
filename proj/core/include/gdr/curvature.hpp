#pragma once

#include <cstdint>

namespace gdr {

// The function class F_{mu,L}: curvature confined to [mu, L].
// mu < 0 hypoconvex, mu = 0 convex, mu > 0 strongly convex.
struct CurvatureClass {
    double mu;
    double l_upper;
    double kappa;  // mu / l_upper, stored redundantly

    CurvatureClass(double mu_, double l_upper_);

    static CurvatureClass from_kappa(double kappa_, double l_upper_ = 1.0);

    // Lipschitz constant of the gradient.
    double lipschitz() const;
};

// Per-step scalars every rate formula consumes. gl = gamma*L, gm = gamma*mu.
struct NormalizedStep {
    double gl;
    double gm;
    double rho;  // 1 - gl
    double eta;  // 1 - gm

    NormalizedStep(double gl_, const CurvatureClass& cls);
};

// E_k(x) = sum_{j=1}^{2k} x^{-j}; closed geometric form away from x = 1,
// direct sum near it. Domain: x != 0, 1 <= k <= 1e6.
double e_k(double x, std::int64_t k);

// T_k(gl, kappa) = E_k(1 - kappa*gl) - E_k(1 - gl); T_0 := 0.
// gl = 1 with k >= 1 is outside the domain.
double t_k(double gl, double kappa, std::int64_t k);

// p(l, u) = 2 - (-l*u) / (1 - u - |1 - l|), the one-step rate coefficient.
// Requires l in (0, 2), u < l and 2 - l - u > 0.
double p_coeff(double l, double u);

// x^n by squaring; n may be negative. Overflow saturates to +/-inf.
double pow_int(double x, std::int64_t n);

}  // namespace gdr
