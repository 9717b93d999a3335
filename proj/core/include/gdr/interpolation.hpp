#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdr/curvature.hpp"
#include "gdr/vec.hpp"

namespace gdr {

// One first-order oracle record (x, g, f).
struct Triplet {
    Vec x;
    Vec g;
    double f = 0.0;
};

struct TripletSet {
    std::vector<Triplet> items;
    std::size_t dimension = 0;

    static TripletSet of(std::vector<Triplet> items);
    std::size_t size() const { return items.size(); }
    const Triplet& operator[](std::size_t i) const { return items[i]; }
};

// f_a - f_b - <g_b, x_a - x_b> - ||g_a-g_b||^2/(2L)
//   - mu/(2L(L-mu)) ||g_a - g_b - L(x_a - x_b)||^2.
// Nonnegative for every ordered pair iff the set interpolates an F_{mu,L}
// function.
double interp_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls);

// -<g_a - g_b - L(x_a-x_b), g_a - g_b - mu(x_a-x_b)>; the sum of the two
// ordered interpolation residuals equals this divided by (L - mu).
double cocoercivity_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls);

struct WorstPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double scaled_residual = 0.0;
};

struct InterpReport {
    bool interpolable = true;
    WorstPair worst;
};

// Checks every ordered pair; residuals are scaled by
// 1 + |f_a| + |f_b| + max(||g_a||^2, ||g_b||^2)/L because tight instances sit
// exactly on the constraint boundary.
InterpReport is_interpolable(const TripletSet& set, const CurvatureClass& cls,
                             double tol = 1e-8);

struct FStarResult {
    double f_star = 0.0;
    Vec x_star;
    std::size_t index = 0;
};

// f* = min_i f_i - ||g_i||^2/(2L); x* = x_{i*} - g_{i*}/L. Ties resolve to
// the lowest index.
FStarResult f_star_of(const TripletSet& set, const CurvatureClass& cls);

// ||g_a||^2 - ||g_b||^2 - (2-gl)/gl * ||g_a - g_b||^2, where b follows a by
// one step of stepsize gl; nonnegative on convex trajectories.
double grad_norm_monotonicity_residual(const Triplet& a, const Triplet& b, double gl);

enum class DescentLemma { N2SD, N4SD, TwoSD, FourSD, GN4SD, G4SD, D2, SC_L, SC_mu };

// LHS - RHS of each descent inequality, one entry per application along the
// trajectory. Throws when gl falls outside the chosen lemma's stepsize range.
std::vector<double> descent_lemma_residuals(const TripletSet& trajectory,
                                            const CurvatureClass& cls, double gl,
                                            DescentLemma which);

// Raw single-application residuals (no stepsize-range validation).
double n2sd_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls, double gl);
double n4sd_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls, double gl);
double gn4sd_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                      std::int64_t k);
double g4sd_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                     std::int64_t k);
double d2_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                   std::int64_t k);
double sc_l_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                     std::int64_t i);
double sc_mu_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                      std::int64_t i);

}  // namespace gdr
