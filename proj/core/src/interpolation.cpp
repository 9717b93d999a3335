#include "gdr/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gdr/thresholds.hpp"

namespace gdr {

namespace {

double e_or_zero(double x, std::int64_t k) { return k == 0 ? 0.0 : e_k(x, k); }

// the lemmas presuppose a GD trace: x_{i+1} = x_i - (gl/L) g_i
void require_trajectory(const TripletSet& traj, const CurvatureClass& cls, double gl) {
    const double gamma = gl / cls.l_upper;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
        const Triplet& a = traj[i];
        const Triplet& b = traj[i + 1];
        for (std::size_t d = 0; d < a.x.size(); ++d) {
            const double pred = a.x[d] - gamma * a.g[d];
            if (std::abs(pred - b.x[d]) > 1e-9 * (1.0 + std::abs(pred)))
                throw std::domain_error("descent lemma: not a gradient descent trace");
        }
    }
}

}  // namespace

TripletSet TripletSet::of(std::vector<Triplet> items) {
    TripletSet set;
    if (items.empty()) throw std::invalid_argument("TripletSet: empty");
    set.dimension = items.front().x.size();
    if (set.dimension == 0) throw std::invalid_argument("TripletSet: zero dimension");
    for (const Triplet& t : items) {
        if (t.x.size() != set.dimension || t.g.size() != set.dimension)
            throw std::invalid_argument("TripletSet: inconsistent dimensions");
    }
    set.items = std::move(items);
    return set;
}

double interp_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls) {
    const double L = cls.l_upper;
    const double mu = cls.mu;
    const Vec dx = sub(a.x, b.x);
    const Vec dg = sub(a.g, b.g);
    const Vec mix = axpy(-L, dx, dg);  // g_a - g_b - L(x_a - x_b)
    return a.f - b.f - dot(b.g, dx) - norm2(dg) / (2.0 * L)
         - mu / (2.0 * L * (L - mu)) * norm2(mix);
}

double cocoercivity_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls) {
    const Vec dx = sub(a.x, b.x);
    const Vec dg = sub(a.g, b.g);
    return -dot(axpy(-cls.l_upper, dx, dg), axpy(-cls.mu, dx, dg));
}

InterpReport is_interpolable(const TripletSet& set, const CurvatureClass& cls, double tol) {
    InterpReport report;
    report.worst.scaled_residual = std::numeric_limits<double>::infinity();
    const double L = cls.l_upper;
    const std::size_t n = set.size();
    if (n < 2) {
        report.worst.scaled_residual = 0.0;
        return report;  // singleton: empty pair set
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double r = interp_residual(set[i], set[j], cls);
            const double scale = 1.0 + std::abs(set[i].f) + std::abs(set[j].f)
                               + std::max(norm2(set[i].g), norm2(set[j].g)) / L;
            const double scaled = r / scale;
            if (scaled < report.worst.scaled_residual) report.worst = {i, j, scaled};
        }
    }
    report.interpolable = report.worst.scaled_residual >= -tol;
    return report;
}

FStarResult f_star_of(const TripletSet& set, const CurvatureClass& cls) {
    const double L = cls.l_upper;
    FStarResult res;
    res.f_star = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const double v = set[i].f - norm2(set[i].g) / (2.0 * L);
        if (v < res.f_star) {
            res.f_star = v;
            res.index = i;
        }
    }
    res.x_star = axpy(-1.0 / L, set[res.index].g, set[res.index].x);
    return res;
}

double grad_norm_monotonicity_residual(const Triplet& a, const Triplet& b, double gl) {
    if (!(gl > 0.0) || !(gl < 2.0))
        throw std::domain_error("grad_norm_monotonicity_residual: gl must lie in (0, 2)");
    return norm2(a.g) - norm2(b.g) - (2.0 - gl) / gl * norm2(sub(a.g, b.g));
}

double n2sd_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls, double gl) {
    const double L = cls.l_upper;
    const double mu = cls.mu;
    const double gm = cls.kappa * gl;
    return a.f - b.f - (gl * gm - 2.0 * gm + gl) / (L - mu) * norm2(a.g) / 2.0
         - gl / (L - mu) * norm2(b.g) / 2.0;
}

double n4sd_residual(const Triplet& a, const Triplet& b, const CurvatureClass& cls, double gl) {
    const double gamma = gl / cls.l_upper;
    const double gm = cls.kappa * gl;
    const double den = 2.0 - gl - gm;
    return a.f - b.f
         - gamma * ((2.0 - gl) * (2.0 - gm) - 1.0) / den * norm2(a.g) / 2.0
         - gamma / den * norm2(b.g) / 2.0;
}

double gn4sd_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                      std::int64_t k) {
    if (k < 0 || static_cast<std::size_t>(k + 1) >= traj.size())
        throw std::domain_error("gn4sd_residual: k out of range");
    if (k == 0) return n4sd_residual(traj[0], traj[1], cls, gl);
    const double gamma = gl / cls.l_upper;
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl;
    const double eta = 1.0 - gm;
    const double tkk = t_k(gl, cls.kappa, k);
    const double tk1 = t_k(gl, cls.kappa, k + 1);
    const double d = eta * eta - rho * rho;
    const auto& gk = traj[static_cast<std::size_t>(k)].g;
    const auto& gk1 = traj[static_cast<std::size_t>(k + 1)].g;
    return traj[0].f - traj[static_cast<std::size_t>(k + 1)].f
         - gamma * (-eta * eta * rho * rho * tk1 / d * norm2(gk) / 2.0
                    + (tkk + (eta - rho)) / d * norm2(gk1) / 2.0);
}

double g4sd_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                     std::int64_t k) {
    if (static_cast<std::size_t>(k + 1) >= traj.size())
        throw std::domain_error("g4sd_residual: k out of range");
    const double L = cls.l_upper;
    const double rho = 1.0 - gl;
    double geom = 0.0;  // sum_{i=0}^{k} rho^{-2i}
    for (std::int64_t i = 0; i <= k; ++i) geom += pow_int(1.0 / rho, 2 * i);
    const double ca = 2.0 * (k + 1) * (-(rho * rho)) / (2.0 - gl) + geom;
    const double cb = 2.0 * (k + 1) / (2.0 - gl) - geom;
    const auto& gk = traj[static_cast<std::size_t>(k)].g;
    const auto& gk1 = traj[static_cast<std::size_t>(k + 1)].g;
    return traj[0].f - traj[static_cast<std::size_t>(k + 1)].f
         - ca * norm2(gk) / (2.0 * L) - cb * norm2(gk1) / (2.0 * L);
}

double d2_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                   std::int64_t k) {
    if (k < 1 || static_cast<std::size_t>(k + 1) >= traj.size())
        throw std::domain_error("d2_residual: k out of range");
    const double gamma = gl / cls.l_upper;
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl;
    const double eta = 1.0 - gm;
    const double tkk = t_k(gl, cls.kappa, k);
    const auto& gk = traj[static_cast<std::size_t>(k)].g;
    const auto& gk1 = traj[static_cast<std::size_t>(k + 1)].g;
    const double lhs = traj[0].f - traj[static_cast<std::size_t>(k)].f
                     + (eta + rho) * tkk / (2.0 * (eta - rho))
                           * (traj[static_cast<std::size_t>(k)].f
                              - traj[static_cast<std::size_t>(k + 1)].f);
    const double rhs = gamma * ((e_k(eta, k) + e_k(rho, k)) * norm2(gk) / 4.0
                                + tkk / (2.0 * (eta - rho))
                                      * (eta * rho * norm2(gk) / 2.0 + dot(gk, gk1)
                                         + norm2(gk1) / 2.0));
    return lhs - rhs;
}

double sc_l_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                     std::int64_t i) {
    if (static_cast<std::size_t>(i + 1) >= traj.size())
        throw std::domain_error("sc_l_residual: index out of range");
    const double gamma = gl / cls.l_upper;
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl;
    const double eta = 1.0 - gm;
    const auto& gi = traj[static_cast<std::size_t>(i)].g;
    const auto& gi1 = traj[static_cast<std::size_t>(i + 1)].g;
    const Vec mix = axpy(-rho, gi, gi1);  // g_{i+1} - rho g_i
    const double rhs = -e_or_zero(rho, i) * norm2(gi) / 2.0
                     + e_k(rho, i + 1) * norm2(gi1) / 2.0
                     + (1.0 - (eta + rho) * e_k(rho, i + 1)) / (eta - rho) * norm2(mix) / 2.0;
    return traj[static_cast<std::size_t>(i)].f - traj[static_cast<std::size_t>(i + 1)].f
         - gamma * rhs;
}

double sc_mu_residual(const TripletSet& traj, const CurvatureClass& cls, double gl,
                      std::int64_t i) {
    if (static_cast<std::size_t>(i + 1) >= traj.size())
        throw std::domain_error("sc_mu_residual: index out of range");
    const double gamma = gl / cls.l_upper;
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl;
    const double eta = 1.0 - gm;
    const auto& gi = traj[static_cast<std::size_t>(i)].g;
    const auto& gi1 = traj[static_cast<std::size_t>(i + 1)].g;
    const Vec mix = axpy(-eta, gi, gi1);  // g_{i+1} - eta g_i
    const double rhs = -e_or_zero(eta, i) * norm2(gi) / 2.0
                     + e_k(eta, i + 1) * norm2(gi1) / 2.0
                     + (-1.0 + (eta + rho) * e_k(eta, i + 1)) / (eta - rho) * norm2(mix) / 2.0;
    return traj[static_cast<std::size_t>(i)].f - traj[static_cast<std::size_t>(i + 1)].f
         - gamma * rhs;
}

std::vector<double> descent_lemma_residuals(const TripletSet& traj,
                                            const CurvatureClass& cls, double gl,
                                            DescentLemma which) {
    if (traj.size() < 2) throw std::domain_error("descent lemma: trajectory too short");
    if (!(gl > 0.0) || !(gl < 2.0)) throw std::domain_error("descent lemma: gl outside (0, 2)");
    require_trajectory(traj, cls, gl);
    const double ginf = gamma_bar_inf(cls.kappa);
    const std::int64_t steps = static_cast<std::int64_t>(traj.size()) - 1;
    std::vector<double> res;

    auto per_step = [&](auto&& f) {
        for (std::int64_t i = 0; i < steps; ++i)
            res.push_back(f(traj[static_cast<std::size_t>(i)],
                            traj[static_cast<std::size_t>(i + 1)]));
    };

    switch (which) {
        case DescentLemma::N2SD:
            if (!(cls.mu <= 0.0)) throw std::domain_error("N2SD: requires mu <= 0");
            if (gl > 1.0) throw std::domain_error("N2SD: gl must lie in (0, 1]");
            per_step([&](const Triplet& a, const Triplet& b) {
                return n2sd_residual(a, b, cls, gl);
            });
            break;
        case DescentLemma::TwoSD:
            if (cls.mu != 0.0) throw std::domain_error("2SD: requires mu = 0");
            if (gl > 1.0) throw std::domain_error("2SD: gl must lie in (0, 1]");
            per_step([&](const Triplet& a, const Triplet& b) {
                const double gamma = gl / cls.l_upper;
                return a.f - b.f - gamma * (norm2(a.g) + norm2(b.g)) / 2.0;
            });
            break;
        case DescentLemma::N4SD:
            if (gl < 1.0 || gl >= ginf) throw std::domain_error("N4SD: gl outside [1, gbar_inf)");
            per_step([&](const Triplet& a, const Triplet& b) {
                return n4sd_residual(a, b, cls, gl);
            });
            break;
        case DescentLemma::FourSD:
            if (cls.mu != 0.0) throw std::domain_error("4SD: requires mu = 0");
            if (gl < 1.0) throw std::domain_error("4SD: gl outside [1, 2)");
            per_step([&](const Triplet& a, const Triplet& b) {
                const double gamma = gl / cls.l_upper;
                return a.f - b.f - gamma * (3.0 - 2.0 * gl) / (2.0 - gl) * norm2(a.g) / 2.0
                     - gamma / (2.0 - gl) * norm2(b.g) / 2.0;
            });
            break;
        case DescentLemma::GN4SD: {
            if (gl < 1.0 || gl >= ginf)
                throw std::domain_error("GN4SD: gl outside [1, gbar_inf)");
            const std::int64_t nb =
                gl > 1.0 ? n_bar(gl, cls.kappa, std::max<std::int64_t>(steps, 1)) : 0;
            for (std::int64_t k = 0; k <= std::min(steps - 1, nb); ++k)
                res.push_back(gn4sd_residual(traj, cls, gl, k));
            break;
        }
        case DescentLemma::G4SD: {
            if (cls.mu != 0.0) throw std::domain_error("G4SD: requires mu = 0");
            if (gl < 1.0) throw std::domain_error("G4SD: gl outside [1, 2)");
            const std::int64_t nb =
                gl > 1.0 ? n_bar(gl, 0.0, std::max<std::int64_t>(steps, 1)) : 0;
            for (std::int64_t k = 0; k <= std::min(steps - 1, nb); ++k)
                res.push_back(g4sd_residual(traj, cls, gl, k));
            break;
        }
        case DescentLemma::D2: {
            if (!(gl > 1.0) || gl >= ginf)
                throw std::domain_error("D2: gl outside (1, gbar_inf)");
            const std::int64_t nb = n_bar(gl, cls.kappa, std::max<std::int64_t>(steps, 1));
            if (nb < 1) throw std::domain_error("D2: gl below gamma_bar_1");
            for (std::int64_t k = 1; k <= std::min(steps - 1, nb); ++k)
                res.push_back(d2_residual(traj, cls, gl, k));
            break;
        }
        case DescentLemma::SC_L:
            if (!(gl > 1.0)) throw std::domain_error("SC_L: gl outside (1, 2)");
            for (std::int64_t i = 0; i < steps; ++i)
                res.push_back(sc_l_residual(traj, cls, gl, i));
            break;
        case DescentLemma::SC_mu:
            if (gl >= ginf) throw std::domain_error("SC_mu: gl outside (0, gbar_inf)");
            for (std::int64_t i = 0; i < steps; ++i)
                res.push_back(sc_mu_residual(traj, cls, gl, i));
            break;
    }
    return res;
}

}  // namespace gdr
