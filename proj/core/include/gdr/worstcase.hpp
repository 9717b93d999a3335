#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gdr/curvature.hpp"
#include "gdr/interpolation.hpp"
#include "gdr/rates.hpp"
#include "gdr/vec.hpp"

namespace gdr {

// 1D piecewise quadratic, C^1 at every breakpoint. Segment j covers
// (breakpoints[j-1], breakpoints[j]); the outer segments extend to +/-inf.
struct Piecewise1D {
    struct Segment {
        double curvature;
        double slope_at_ref;
        double value_at_ref;
        double ref;
    };
    std::vector<double> breakpoints;  // sorted ascending
    std::vector<Segment> segments;    // breakpoints.size() + 1 entries
};

// L-quadratic inside |x| < tau, mu-quadratic with affine match outside.
struct HuberQuadratic {
    double tau;
    double mu;
    double l_upper;
};

// f(x) = 1/2 sum_i curvatures[i] x_i^2 + <linear, x>.
struct DiagQuadratic {
    Vec curvatures;
    Vec linear;
};

using Payload = std::variant<Piecewise1D, HuberQuadratic, DiagQuadratic, TripletSet>;

struct WorstCaseInstance {
    Payload payload;
    Vec x0;
    double expected_denominator;
    Regime regime;
    CurvatureClass cls;
    std::vector<double> schedule;  // normalized stepsizes, one per iteration
    double gap;                    // target f(x0) - f*
    bool conjectured = false;

    std::int64_t iterations() const { return static_cast<std::int64_t>(schedule.size()); }
};

// value and gradient of an analytic payload; throws for TripletSet payloads
std::pair<double, Vec> eval_value_and_grad(const Payload& payload, const Vec& x);

bool payload_is_analytic(const Payload& payload);

// --- generators; each instance attains its expected_denominator exactly ---

WorstCaseInstance wc_convex(double l_upper, double gl, std::int64_t n, double gap = 1.0);
WorstCaseInstance wc_strongly_convex(const CurvatureClass& cls, double gl, std::int64_t n,
                                     double gap = 1.0);
// gl_i in (0, 1], mu < 0: 1D piecewise quadratic with constant gradients
WorstCaseInstance wc_nonconvex_short(const CurvatureClass& cls,
                                     const std::vector<double>& gls, double gap = 1.0);
// gl in [1, gbar_1], mu < 0: 2D triplets with alternating gradients
WorstCaseInstance wc_nonconvex_mid(const CurvatureClass& cls, double gl, std::int64_t n,
                                   double gap = 1.0);
// gl_i in [1, gbar_1], mu < 0: rotation recurrence; conjectured when the
// schedule is non-constant
WorstCaseInstance wc_nonconvex_mid_variable(const CurvatureClass& cls,
                                            const std::vector<double>& gls,
                                            double gap = 1.0);
// gl in [gbar_{N-1}, gbar_N), mu < 0: diagonal (L, mu) quadratic in 2D
WorstCaseInstance wc_quadratic_2d(const CurvatureClass& cls, double gl, std::int64_t n,
                                  double gap = 1.0);
// gl in [gbar_N, 2): the pure L-quadratic in 1D
WorstCaseInstance wc_linear_regime(const CurvatureClass& cls, double gl, std::int64_t n,
                                   double gap = 1.0);
// gl with n_bar in [1, N-2], mu < 0: conjectured 3D triplets
// rotation_sign flips the +/- choice inside the tail rotation blocks
WorstCaseInstance wc_conjectured_3d(const CurvatureClass& cls, double gl, std::int64_t n,
                                    double gap = 1.0, int rotation_sign = +1);

// Regime dispatch over the sign of mu and the threshold cell of gl.
WorstCaseInstance select_worst_case(const CurvatureClass& cls, double gl, std::int64_t n,
                                    double gap = 1.0);

// Necessary equality conditions on worst-case triplets for gl in (1, gbar_N):
// tail gradient norms, head norm/inner-product recurrences, the distance-2
// identity, function-value ratios and the argmin condition.
struct NecCondsReport {
    double max_deviation = 0.0;
    std::vector<std::pair<std::string, double>> deviations;
};

NecCondsReport check_nec_conds_3d(const TripletSet& set, const CurvatureClass& cls,
                                  double gl, std::int64_t n);

// JSON serialization (schema shared with the CLI).
std::string instance_to_json(const WorstCaseInstance& inst, int indent = 2);
WorstCaseInstance instance_from_json(const std::string& text);
std::string triplets_to_json(const TripletSet& set, int indent = 2);
TripletSet triplets_from_json(const std::string& text);

}  // namespace gdr
