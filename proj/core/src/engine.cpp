#include "gdr/engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gdr {

Trajectory run_gd(const Oracle& oracle, const Vec& x0, const StepsizeSchedule& schedule,
                  const CurvatureClass& cls) {
    if (schedule.entries.empty()) throw std::domain_error("run_gd: empty schedule");
    for (double gl : schedule.entries)
        if (!(gl > 0.0) || !(gl < 2.0))
            throw std::domain_error("run_gd: normalized stepsizes must lie in (0, 2)");
    std::vector<Triplet> trips;
    trips.reserve(schedule.entries.size() + 1);
    Vec x = x0;
    for (double gl : schedule.entries) {
        auto [f, g] = oracle(x);
        trips.push_back({x, g, f});
        x = axpy(-gl / cls.l_upper, g, x);
    }
    auto [f, g] = oracle(x);
    trips.push_back({x, g, f});
    return {TripletSet::of(std::move(trips)), schedule, cls};
}

namespace {

// replayed triplet sets must be an exact GD trace with decreasing values
void validate_replay(const TripletSet& set, const std::vector<double>& gls,
                     const CurvatureClass& cls) {
    if (set.size() != gls.size() + 1)
        throw std::invalid_argument("replay: triplet count does not match the schedule");
    const double L = cls.l_upper;
    for (std::size_t i = 0; i < gls.size(); ++i) {
        const Vec pred = axpy(-gls[i] / L, set[i].g, set[i].x);
        for (std::size_t d = 0; d < pred.size(); ++d) {
            if (std::abs(pred[d] - set[i + 1].x[d]) > 1e-12 * (1.0 + std::abs(pred[d])))
                throw std::invalid_argument("replay: triplets do not follow the iteration");
        }
        if (set[i + 1].f > set[i].f + 1e-12 * (1.0 + std::abs(set[i].f)))
            throw std::invalid_argument("replay: function values must not increase");
    }
}

}  // namespace

Trajectory trajectory_of(const WorstCaseInstance& inst) {
    StepsizeSchedule sched{inst.schedule, ScheduleKind::custom};
    if (payload_is_analytic(inst.payload)) {
        Oracle oracle = [&inst](const Vec& x) { return eval_value_and_grad(inst.payload, x); };
        return run_gd(oracle, inst.x0, sched, inst.cls);
    }
    const auto& set = std::get<TripletSet>(inst.payload);
    validate_replay(set, inst.schedule, inst.cls);
    return {set, sched, inst.cls};
}

Performance performance(const Trajectory& traj, double f_star) {
    const double L = traj.cls.l_upper;
    double min_norm = std::numeric_limits<double>::infinity();
    for (const Triplet& t : traj.triplets.items) min_norm = std::min(min_norm, norm2(t.g));
    return {min_norm / (2.0 * L), traj.triplets[0].f - f_star};
}

TightnessReport tightness_report(const WorstCaseInstance& inst) {
    const Trajectory traj = trajectory_of(inst);
    const FStarResult fs = f_star_of(traj.triplets, inst.cls);
    const Performance perf = performance(traj, fs.f_star);
    const InterpReport interp = is_interpolable(traj.triplets, inst.cls, 1e-8);
    const double bound = perf.gap / inst.expected_denominator;
    return {inst.regime.label(),
            inst.expected_denominator,
            bound,
            perf.min_grad_metric,
            perf.min_grad_metric / bound,
            interp.interpolable,
            interp.worst.scaled_residual,
            inst.conjectured};
}

TightnessReport tightness_report(const CurvatureClass& cls, double gl, std::int64_t n,
                                 double gap) {
    return tightness_report(select_worst_case(cls, gl, n, gap));
}

}  // namespace gdr
