#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "gdr/curvature.hpp"
#include "gdr/interpolation.hpp"
#include "gdr/rates.hpp"
#include "gdr/schedules.hpp"
#include "gdr/vec.hpp"
#include "gdr/worstcase.hpp"

namespace gdr {

// first-order oracle: x -> (f(x), grad f(x))
using Oracle = std::function<std::pair<double, Vec>(const Vec&)>;

struct Trajectory {
    TripletSet triplets;  // indices 0..N
    StepsizeSchedule schedule;
    CurvatureClass cls;

    std::int64_t iterations() const { return static_cast<std::int64_t>(schedule.entries.size()); }
};

// Runs gradient descent x_{i+1} = x_i - (gl_i / L) g_i and records the trace.
Trajectory run_gd(const Oracle& oracle, const Vec& x0, const StepsizeSchedule& schedule,
                  const CurvatureClass& cls);

// Builds the trajectory of an instance: simulation for analytic payloads,
// validated replay for triplet payloads.
Trajectory trajectory_of(const WorstCaseInstance& inst);

struct Performance {
    double min_grad_metric;  // min_i ||g_i||^2 / (2L)
    double gap;              // f(x_0) - f_star

    double ratio_to_bound(const RateBound& bound) const {
        return min_grad_metric * bound.denominator / gap;
    }
};

Performance performance(const Trajectory& traj, double f_star);

struct TightnessReport {
    std::string regime;
    double denominator;
    double bound;     // gap / denominator
    double achieved;  // min gradient metric on the trajectory
    double ratio;     // achieved / bound
    bool interpolable;
    double worst_residual;
    bool conjectured;
};

// Builds the worst case for (cls, gl, n), runs or replays it and certifies
// the bound it was built to attain.
TightnessReport tightness_report(const CurvatureClass& cls, double gl, std::int64_t n,
                                 double gap = 1.0);
TightnessReport tightness_report(const WorstCaseInstance& inst);

}  // namespace gdr
