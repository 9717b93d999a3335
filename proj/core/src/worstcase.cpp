#include "gdr/worstcase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "gdr/schedules.hpp"
#include "gdr/thresholds.hpp"

namespace gdr {

namespace {

using nlohmann::json;

void check_c1(const Piecewise1D& f) {
    for (std::size_t j = 0; j < f.breakpoints.size(); ++j) {
        const double b = f.breakpoints[j];
        const auto& l = f.segments[j];
        const auto& r = f.segments[j + 1];
        const double vl = 0.5 * l.curvature * (b - l.ref) * (b - l.ref)
                        + l.slope_at_ref * (b - l.ref) + l.value_at_ref;
        const double vr = 0.5 * r.curvature * (b - r.ref) * (b - r.ref)
                        + r.slope_at_ref * (b - r.ref) + r.value_at_ref;
        const double gl_ = l.curvature * (b - l.ref) + l.slope_at_ref;
        const double gr = r.curvature * (b - r.ref) + r.slope_at_ref;
        const double scale = 1.0 + std::abs(vl) + std::abs(gl_);
        if (std::abs(vl - vr) > 1e-10 * scale || std::abs(gl_ - gr) > 1e-10 * scale)
            throw std::logic_error("Piecewise1D: C1 continuity violated at a breakpoint");
    }
}

std::pair<double, Vec> eval_piecewise(const Piecewise1D& f, double x) {
    const auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), x);
    const auto& s = f.segments[static_cast<std::size_t>(it - f.breakpoints.begin())];
    const double d = x - s.ref;
    return {0.5 * s.curvature * d * d + s.slope_at_ref * d + s.value_at_ref,
            {s.curvature * d + s.slope_at_ref}};
}

std::pair<double, Vec> eval_huber(const HuberQuadratic& f, double x) {
    const double L = f.l_upper, mu = f.mu, tau = f.tau;
    if (std::abs(x) < tau) return {0.5 * L * x * x, {L * x}};
    const double s = x >= 0.0 ? 1.0 : -1.0;
    return {0.5 * mu * x * x + (L - mu) * tau * std::abs(x) - 0.5 * (L - mu) * tau * tau,
            {mu * x + (L - mu) * tau * s}};
}

std::pair<double, Vec> eval_quad(const DiagQuadratic& f, const Vec& x) {
    if (x.size() != f.curvatures.size())
        throw std::invalid_argument("DiagQuadratic: dimension mismatch");
    double v = 0.0;
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        v += 0.5 * f.curvatures[i] * x[i] * x[i] + f.linear[i] * x[i];
        g[i] = f.curvatures[i] * x[i] + f.linear[i];
    }
    return {v, g};
}

// f0 - fN for a target f0 - f*: at the worst case fN - f* = ||g_N||^2/(2L),
// which shifts the denominator by one.
double gap_to_fn(double gap, double denom) { return gap * (denom - 1.0) / denom; }

}  // namespace

std::pair<double, Vec> eval_value_and_grad(const Payload& payload, const Vec& x) {
    return std::visit(
        [&x](const auto& p) -> std::pair<double, Vec> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Piecewise1D>) {
                if (x.size() != 1) throw std::invalid_argument("Piecewise1D is 1D");
                return eval_piecewise(p, x[0]);
            } else if constexpr (std::is_same_v<T, HuberQuadratic>) {
                if (x.size() != 1) throw std::invalid_argument("HuberQuadratic is 1D");
                return eval_huber(p, x[0]);
            } else if constexpr (std::is_same_v<T, DiagQuadratic>) {
                return eval_quad(p, x);
            } else {
                throw std::domain_error("eval_value_and_grad: triplet payloads are not analytic");
            }
        },
        payload);
}

bool payload_is_analytic(const Payload& payload) {
    return !std::holds_alternative<TripletSet>(payload);
}

WorstCaseInstance wc_convex(double l_upper, double gl, std::int64_t n, double gap) {
    CurvatureClass cls(0.0, l_upper);
    if (!(gl > 0.0) || !(gl < 2.0)) throw std::domain_error("wc_convex: gl outside (0, 2)");
    if (n < 1) throw std::domain_error("wc_convex: n must be >= 1");
    const RateBound rb = denom_convex(gl, n);
    const double L = l_upper;
    WorstCaseInstance inst{HuberQuadratic{}, {}, rb.denominator, rb.regime,
                           cls,              {}, gap,            false};
    inst.schedule.assign(static_cast<std::size_t>(n), gl);
    if (gl < gamma_bar(n, 0.0)) {
        const double tau = std::sqrt(2.0 / L * gap / rb.denominator);
        inst.payload = HuberQuadratic{tau, 0.0, L};
        inst.x0 = {tau * (1.0 + static_cast<double>(n) * gl)};
    } else {
        inst.payload = DiagQuadratic{{L}, {0.0}};
        inst.x0 = {std::sqrt(2.0 * gap / L)};
    }
    return inst;
}

WorstCaseInstance wc_strongly_convex(const CurvatureClass& cls, double gl, std::int64_t n,
                                     double gap) {
    if (!(cls.mu > 0.0)) throw std::domain_error("wc_strongly_convex: requires mu > 0");
    if (!(gl > 0.0) || !(gl < 2.0))
        throw std::domain_error("wc_strongly_convex: gl outside (0, 2)");
    if (n < 1) throw std::domain_error("wc_strongly_convex: n must be >= 1");
    const RateBound rb = denom_strongly_convex(gl, cls.kappa, n);
    const double L = cls.l_upper, mu = cls.mu;
    WorstCaseInstance inst{HuberQuadratic{}, {}, rb.denominator, rb.regime,
                           cls,              {}, gap,            false};
    inst.schedule.assign(static_cast<std::size_t>(n), gl);
    if (gl < gamma_bar(n, cls.kappa)) {
        const double gm = cls.kappa * gl;
        const double tau = std::sqrt(2.0 / L * gap / rb.denominator);
        const double g0 = L * tau * pow_int(1.0 / (1.0 - gm), n);
        inst.payload = HuberQuadratic{tau, mu, L};
        inst.x0 = {(g0 - (L - mu) * tau) / mu};
    } else {
        inst.payload = DiagQuadratic{{L}, {0.0}};
        inst.x0 = {std::sqrt(2.0 * gap / L)};
    }
    return inst;
}

WorstCaseInstance wc_nonconvex_short(const CurvatureClass& cls,
                                     const std::vector<double>& gls, double gap) {
    if (!(cls.mu < 0.0)) throw std::domain_error("wc_nonconvex_short: requires mu < 0");
    if (gls.empty()) throw std::domain_error("wc_nonconvex_short: empty schedule");
    const double L = cls.l_upper, mu = cls.mu;
    const std::size_t n = gls.size();
    std::vector<double> coeff(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double gl = gls[i];
        if (!(gl > 0.0) || gl > 1.0 + 1e-12)
            throw std::domain_error("wc_nonconvex_short: stepsizes must lie in (0, 1]");
        coeff[i] = gl * p_coeff(gl, cls.kappa * gl);
    }
    double total = 0.0;
    for (double c : coeff) total += c;
    const double denom = 1.0 + total;
    const double gap_n = gap_to_fn(gap, denom);
    const double u = std::sqrt(2.0 * L * gap_n / total);

    // iterates march toward x_N = 0 with constant gradient u
    std::vector<double> xs(n + 1, 0.0), fs(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        xs[i] = xs[i + 1] + gls[i] / L * u;
        fs[i] = fs[i + 1] + u * u / (2.0 * L) * coeff[i];
    }

    Piecewise1D pw;
    // below x_N and above x_0 the function continues with curvature L
    pw.breakpoints.push_back(xs[n]);
    pw.segments.push_back({L, u, fs[n], xs[n]});
    for (std::size_t i = n; i-- > 0;) {
        const double xbar = xs[i] + mu / (L - mu) * gls[i] / L * u;
        pw.segments.push_back({mu, u, fs[i + 1], xs[i + 1]});
        pw.breakpoints.push_back(xbar);
        pw.segments.push_back({L, u, fs[i], xs[i]});
        pw.breakpoints.push_back(xs[i]);
    }
    pw.segments.push_back({L, u, fs[0], xs[0]});
    check_c1(pw);

    Regime regime{RegimeKind::sublinear, 0};
    return {std::move(pw), {xs[0]}, denom, regime, cls, gls, gap, false};
}

namespace {

// shared core of the [1, gbar_1] triplet constructions
WorstCaseInstance build_mid(const CurvatureClass& cls, const std::vector<double>& gls,
                            double gap, bool conjectured) {
    const double L = cls.l_upper;
    const double g1 = gamma_bar(1, cls.kappa);
    const std::size_t n = gls.size();
    std::vector<double> cs(n), term(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double gl = gls[i];
        if (gl < 1.0 - 1e-12 || gl > g1 + 1e-12)
            throw std::domain_error("wc_nonconvex_mid: stepsizes must lie in [1, gbar_1]");
        const double gm = cls.kappa * gl;
        cs[i] = (1.0 + (1.0 - gl) * (1.0 - gm)) / (2.0 - gl - gm);
        term[i] = gl * (2.0 - gl) * (2.0 - gm) / (2.0 - gl - gm);
    }
    double total = 0.0;
    for (double t : term) total += t;
    const double denom = 1.0 + total;
    const double gap_n = gap_to_fn(gap, denom);
    const double u = std::sqrt(2.0 * L * gap_n / total);

    const bool constant =
        std::all_of(gls.begin(), gls.end(), [&](double g) { return g == gls.front(); });
    std::vector<Vec> gs(n + 1);
    gs[0] = {u * std::sqrt((1.0 + cs[0]) / 2.0), u * std::sqrt((1.0 - cs[0]) / 2.0)};
    if (constant) {
        // canonical representative: the second component alternates in sign
        for (std::size_t i = 1; i <= n; ++i)
            gs[i] = {gs[0][0], (i % 2 == 0) ? gs[0][1] : -gs[0][1]};
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double th =
                ((i % 2 == 0) ? 1.0 : -1.0) * std::acos(std::clamp(cs[i], -1.0, 1.0));
            const double c = std::cos(th), s = std::sin(th);
            gs[i + 1] = {c * gs[i][0] - s * gs[i][1], s * gs[i][0] + c * gs[i][1]};
        }
    }
    std::vector<Vec> xs(n + 1, Vec{0.0, 0.0});
    for (std::size_t i = n; i-- > 0;) xs[i] = axpy(gls[i] / L, gs[i], xs[i + 1]);
    std::vector<Triplet> trips(n + 1);
    double fvalue = 0.0;
    trips[n] = {xs[n], gs[n], 0.0};
    for (std::size_t i = n; i-- > 0;) {
        fvalue += u * u / (2.0 * L) * term[i];
        trips[i] = {xs[i], gs[i], fvalue};
    }
    Regime regime{RegimeKind::sublinear, 0};
    return {TripletSet::of(std::move(trips)), xs[0], denom, regime, cls, gls, gap,
            conjectured};
}

}  // namespace

WorstCaseInstance wc_nonconvex_mid(const CurvatureClass& cls, double gl, std::int64_t n,
                                   double gap) {
    if (!(cls.mu < 0.0)) throw std::domain_error("wc_nonconvex_mid: requires mu < 0");
    if (n < 1) throw std::domain_error("wc_nonconvex_mid: n must be >= 1");
    return build_mid(cls, std::vector<double>(static_cast<std::size_t>(n), gl), gap, false);
}

WorstCaseInstance wc_nonconvex_mid_variable(const CurvatureClass& cls,
                                            const std::vector<double>& gls, double gap) {
    if (!(cls.mu < 0.0))
        throw std::domain_error("wc_nonconvex_mid_variable: requires mu < 0");
    if (gls.empty()) throw std::domain_error("wc_nonconvex_mid_variable: empty schedule");
    const bool constant =
        std::all_of(gls.begin(), gls.end(), [&](double g) { return g == gls.front(); });
    return build_mid(cls, gls, gap, !constant);
}

WorstCaseInstance wc_quadratic_2d(const CurvatureClass& cls, double gl, std::int64_t n,
                                  double gap) {
    if (!(cls.mu < 0.0)) throw std::domain_error("wc_quadratic_2d: requires mu < 0");
    if (n < 1) throw std::domain_error("wc_quadratic_2d: n must be >= 1");
    if (gl < gamma_bar(n - 1, cls.kappa) || gl >= gamma_bar(n, cls.kappa))
        throw std::domain_error("wc_quadratic_2d: gl outside [gbar_{N-1}, gbar_N)");
    const double L = cls.l_upper, mu = cls.mu;
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl, eta = 1.0 - gm;
    const RateBound rb = denom_nonconvex_const(gl, cls.kappa, n);
    const double gap_n = gap_to_fn(gap, rb.denominator);
    const double u2 = 2.0 * L * gap_n / (rb.denominator - 1.0);
    const double amp = std::sqrt(u2 * (eta * eta - 1.0) * (1.0 - rho * rho)
                                 / (eta * eta - rho * rho));
    const Vec g_n = {amp * rho / std::sqrt(1.0 - rho * rho),
                     amp * eta / std::sqrt(eta * eta - 1.0)};
    // g_0 = diag(rho, eta)^{-N} g_N; x = H^{-1} (g - g_N)
    const Vec g0 = {g_n[0] * pow_int(1.0 / rho, n), g_n[1] * pow_int(1.0 / eta, n)};
    const Vec x0 = {(g0[0] - g_n[0]) / L, (g0[1] - g_n[1]) / mu};
    WorstCaseInstance inst{DiagQuadratic{{L, mu}, g_n}, x0, rb.denominator, rb.regime,
                           cls, std::vector<double>(static_cast<std::size_t>(n), gl), gap,
                           false};
    return inst;
}

WorstCaseInstance wc_linear_regime(const CurvatureClass& cls, double gl, std::int64_t n,
                                   double gap) {
    if (n < 1) throw std::domain_error("wc_linear_regime: n must be >= 1");
    if (gl < gamma_bar(n, cls.kappa) || !(gl < 2.0))
        throw std::domain_error("wc_linear_regime: gl outside [gbar_N, 2)");
    const double L = cls.l_upper;
    const double denom = pow_int(1.0 / (1.0 - gl), 2 * n);
    WorstCaseInstance inst{DiagQuadratic{{L}, {0.0}},
                           {std::sqrt(2.0 * gap / L)},
                           denom,
                           {RegimeKind::linear_L, 0},
                           cls,
                           std::vector<double>(static_cast<std::size_t>(n), gl),
                           gap,
                           false};
    return inst;
}

WorstCaseInstance wc_conjectured_3d(const CurvatureClass& cls, double gl, std::int64_t n,
                                    double gap, int rotation_sign) {
    if (!(cls.mu < 0.0)) throw std::domain_error("wc_conjectured_3d: requires mu < 0");
    if (n < 3) throw std::domain_error("wc_conjectured_3d: needs n >= 3");
    const std::int64_t nb = n_bar(gl, cls.kappa, n);
    if (nb < 1 || nb > n - 2)
        throw std::domain_error("wc_conjectured_3d: gl outside [gbar_1, gbar_{N-1})");
    const double L = cls.l_upper;
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl, eta = 1.0 - gm;
    const RateBound rb = denom_nonconvex_const(gl, cls.kappa, n);
    const double gap_n = gap_to_fn(gap, rb.denominator);
    const double u2 = 2.0 * L * gap_n / (rb.denominator - 1.0);
    const double amp = std::sqrt(u2 * (eta * eta - 1.0) * (1.0 - rho * rho)
                                 / (eta * eta - rho * rho));

    std::vector<Vec> gs(static_cast<std::size_t>(n + 1));
    const std::int64_t head_end = std::min<std::int64_t>(nb + 1, n);
    for (std::int64_t i = 0; i <= head_end; ++i) {
        gs[static_cast<std::size_t>(i)] = {
            amp * pow_int(rho, i - nb) / std::sqrt(1.0 - rho * rho),
            amp * pow_int(eta, i - nb) / std::sqrt(eta * eta - 1.0), 0.0};
    }
    // tail: first component keeps contracting by rho, the rest rotates so the
    // norm stays at u^2 and consecutive inner products at c*u^2
    for (std::int64_t i = nb + 1; i < n; ++i) {
        const double qmag = std::sqrt((eta * eta - 1.0)
                                      * (1.0 - pow_int(rho, 2 * (i - nb)))
                                      / (1.0 - rho * rho));
        const double q = (((i - nb - 1) % 2 == 0) ? 1.0 : -1.0) * rotation_sign * qmag;
        const double s = 1.0 / (1.0 + q * q);
        const Vec& g = gs[static_cast<std::size_t>(i)];
        const double r1 = s * (g[1] - q * g[2]);
        const double r2 = s * (q * g[1] + g[2]);
        gs[static_cast<std::size_t>(i + 1)] = {rho * g[0], rho * g[1] + (gl - gm) * r1,
                                               rho * g[2] + (gl - gm) * r2};
    }

    std::vector<Vec> xs(static_cast<std::size_t>(n + 1), Vec{0.0, 0.0, 0.0});
    for (std::int64_t i = n; i-- > 0;)
        xs[static_cast<std::size_t>(i)] =
            axpy(gl / L, gs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(i + 1)]);

    // f_i / f_0 ratios built from the partial sums of T_j
    auto qsum = [&](std::int64_t m) {
        double s = 0.0;
        for (std::int64_t j = 1; j <= m; ++j) s += t_k(gl, cls.kappa, j);
        return gl * gm / (gl - gm) * s;
    };
    const double den = static_cast<double>(n) + qsum(nb);
    std::vector<Triplet> trips(static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i) {
        const double f = gap_n * (static_cast<double>(n - i) + qsum(nb - i)) / den;
        trips[static_cast<std::size_t>(i)] = {xs[static_cast<std::size_t>(i)],
                                              gs[static_cast<std::size_t>(i)], f};
    }
    return {TripletSet::of(std::move(trips)),
            xs[0],
            rb.denominator,
            rb.regime,
            cls,
            std::vector<double>(static_cast<std::size_t>(n), gl),
            gap,
            true};
}

WorstCaseInstance select_worst_case(const CurvatureClass& cls, double gl, std::int64_t n,
                                    double gap) {
    if (cls.kappa > 0.0) return wc_strongly_convex(cls, gl, n, gap);
    if (cls.kappa == 0.0) return wc_convex(cls.l_upper, gl, n, gap);
    if (gl <= 1.0)
        return wc_nonconvex_short(cls, std::vector<double>(static_cast<std::size_t>(n), gl),
                                  gap);
    const std::int64_t nb = n_bar(gl, cls.kappa, n);
    if (nb >= n) return wc_linear_regime(cls, gl, n, gap);
    if (nb == n - 1) return wc_quadratic_2d(cls, gl, n, gap);
    if (nb == 0) return wc_nonconvex_mid(cls, gl, n, gap);
    return wc_conjectured_3d(cls, gl, n, gap);
}

NecCondsReport check_nec_conds_3d(const TripletSet& set, const CurvatureClass& cls,
                                  double gl, std::int64_t n) {
    if (set.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("check_nec_conds_3d: set must hold n+1 triplets");
    const double gm = cls.kappa * gl;
    const double rho = 1.0 - gl, eta = 1.0 - gm;
    const std::int64_t nb = n_bar(gl, cls.kappa, n);
    NecCondsReport rep;
    auto record = [&rep](const std::string& name, double dev) {
        rep.deviations.emplace_back(name, dev);
        rep.max_deviation = std::max(rep.max_deviation, dev);
    };

    const double u2 = norm2(set[static_cast<std::size_t>(n)].g);
    // tail gradient norms all equal U^2
    double dev = 0.0;
    for (std::int64_t i = nb; i <= n; ++i)
        dev = std::max(dev, std::abs(norm2(set[static_cast<std::size_t>(i)].g) - u2) / u2);
    record("tail_grad_norms", dev);

    // head norms follow the two-sided geometric recurrence
    const double pref = (eta * eta - 1.0) * (1.0 - rho * rho) / (eta * eta - rho * rho);
    dev = 0.0;
    for (std::int64_t i = 0; i <= std::min<std::int64_t>(nb + 1, n); ++i) {
        const double expect = u2 * pref
                            * (pow_int(eta, 2 * (i - nb)) / (eta * eta - 1.0)
                               + pow_int(rho, 2 * (i - nb)) / (1.0 - rho * rho));
        const double got = norm2(set[static_cast<std::size_t>(i)].g);
        dev = std::max(dev, std::abs(got - expect) / (std::abs(expect) + u2));
    }
    record("head_grad_norms", dev);

    // distance-1 inner products, head then tail
    dev = 0.0;
    for (std::int64_t i = 0; i <= std::min<std::int64_t>(nb, n - 1); ++i) {
        const double expect = u2 * pref
                            * (pow_int(eta, 2 * (i - nb) + 1) / (eta * eta - 1.0)
                               + pow_int(rho, 2 * (i - nb) + 1) / (1.0 - rho * rho));
        const double got = dot(set[static_cast<std::size_t>(i)].g,
                               set[static_cast<std::size_t>(i + 1)].g);
        dev = std::max(dev, std::abs(got - expect) / (std::abs(expect) + u2));
    }
    record("head_inner_products", dev);

    dev = 0.0;
    const double c_tail = u2 * (1.0 + eta * rho) / (eta + rho);
    for (std::int64_t i = nb; i < n; ++i) {
        const double got = dot(set[static_cast<std::size_t>(i)].g,
                               set[static_cast<std::size_t>(i + 1)].g);
        dev = std::max(dev, std::abs(got - c_tail) / u2);
    }
    record("tail_inner_products", dev);

    // distance-2: <g_i, g_{i+2}> = ||g_{i+1}||^2 on the head
    dev = 0.0;
    for (std::int64_t i = 0; i + 2 <= nb + 1 && i + 2 <= n; ++i) {
        if (i > nb - 1) break;
        const double got = dot(set[static_cast<std::size_t>(i)].g,
                               set[static_cast<std::size_t>(i + 2)].g);
        const double expect = norm2(set[static_cast<std::size_t>(i + 1)].g);
        dev = std::max(dev, std::abs(got - expect) / (std::abs(expect) + u2));
    }
    record("distance2_identity", dev);

    // function-value ratios
    auto qsum = [&](std::int64_t m) {
        double s = 0.0;
        for (std::int64_t j = 1; j <= m; ++j) s += t_k(gl, cls.kappa, j);
        return gl * gm / (gl - gm) * s;
    };
    const double f0 = set[0].f, fn = set[static_cast<std::size_t>(n)].f;
    const double den = static_cast<double>(n) + qsum(nb);
    dev = 0.0;
    for (std::int64_t i = 0; i <= n; ++i) {
        const double expect = (static_cast<double>(n - i) + qsum(nb - i)) / den;
        const double got = (set[static_cast<std::size_t>(i)].f - fn) / (f0 - fn);
        dev = std::max(dev, std::abs(got - expect));
    }
    record("function_value_ratios", dev);

    // N attains the minimum of f_i - ||g_i||^2/(2L)
    const double L = cls.l_upper;
    double mn = std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i <= n; ++i)
        mn = std::min(mn, set[static_cast<std::size_t>(i)].f
                              - norm2(set[static_cast<std::size_t>(i)].g) / (2.0 * L));
    const double at_n = fn - u2 / (2.0 * L);
    record("argmin_at_N", std::abs(at_n - mn) / (std::abs(f0 - fn) + u2 / (2.0 * L)));
    return rep;
}

// ---------------- JSON ----------------

namespace {

json triplets_json(const TripletSet& set) {
    json arr = json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        arr.push_back({{"index", i}, {"x", set[i].x}, {"g", set[i].g}, {"f", set[i].f}});
    }
    return arr;
}

TripletSet triplets_from(const json& arr) {
    std::vector<Triplet> items(arr.size());
    for (const auto& rec : arr) {
        const std::size_t idx = rec.at("index").get<std::size_t>();
        if (idx >= items.size()) throw std::invalid_argument("triplets: bad index");
        items[idx] = {rec.at("x").get<Vec>(), rec.at("g").get<Vec>(),
                      rec.at("f").get<double>()};
    }
    return TripletSet::of(std::move(items));
}

}  // namespace

std::string instance_to_json(const WorstCaseInstance& inst, int indent) {
    json j;
    j["mu"] = inst.cls.mu;
    j["L"] = inst.cls.l_upper;
    j["schedule"] = inst.schedule;
    j["gap"] = inst.gap;
    j["x0"] = inst.x0;
    j["expected_denominator"] = inst.expected_denominator;
    j["regime"] = inst.regime.label();
    j["conjectured"] = inst.conjectured;
    std::visit(
        [&j](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Piecewise1D>) {
                j["kind"] = "piecewise1d";
                j["breakpoints"] = p.breakpoints;
                json segs = json::array();
                for (const auto& s : p.segments)
                    segs.push_back({{"curvature", s.curvature},
                                    {"slope_at_ref", s.slope_at_ref},
                                    {"value_at_ref", s.value_at_ref},
                                    {"ref", s.ref}});
                j["segments"] = segs;
            } else if constexpr (std::is_same_v<T, HuberQuadratic>) {
                j["kind"] = "huber";
                j["tau"] = p.tau;
            } else if constexpr (std::is_same_v<T, DiagQuadratic>) {
                j["kind"] = "quadratic";
                j["curvatures"] = p.curvatures;
                j["linear"] = p.linear;
            } else {
                j["kind"] = "triplets";
                j["triplets"] = triplets_json(p);
            }
        },
        inst.payload);
    return j.dump(indent);
}

WorstCaseInstance instance_from_json(const std::string& text) {
    const json j = json::parse(text);
    CurvatureClass cls(j.at("mu").get<double>(), j.at("L").get<double>());
    WorstCaseInstance inst{DiagQuadratic{{cls.l_upper}, {0.0}},
                           j.at("x0").get<Vec>(),
                           j.at("expected_denominator").get<double>(),
                           {RegimeKind::sublinear, 0},
                           cls,
                           j.at("schedule").get<std::vector<double>>(),
                           j.value("gap", 1.0),
                           j.value("conjectured", false)};
    const std::string regime = j.value("regime", "sublinear_0");
    if (regime == "linear_L")
        inst.regime = {RegimeKind::linear_L, 0};
    else if (regime == "linear_mu")
        inst.regime = {RegimeKind::linear_mu, 0};
    else if (regime == "one_step")
        inst.regime = {RegimeKind::one_step, 0};
    else if (regime == "dynamic")
        inst.regime = {RegimeKind::dynamic_schedule, 0};
    else if (regime.rfind("sublinear_", 0) == 0)
        inst.regime = {RegimeKind::sublinear,
                       std::stoll(regime.substr(std::string("sublinear_").size()))};
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "huber") {
        inst.payload = HuberQuadratic{j.at("tau").get<double>(), cls.mu, cls.l_upper};
    } else if (kind == "quadratic") {
        inst.payload = DiagQuadratic{j.at("curvatures").get<Vec>(), j.at("linear").get<Vec>()};
    } else if (kind == "piecewise1d") {
        Piecewise1D pw;
        pw.breakpoints = j.at("breakpoints").get<std::vector<double>>();
        for (const auto& s : j.at("segments"))
            pw.segments.push_back({s.at("curvature").get<double>(),
                                   s.at("slope_at_ref").get<double>(),
                                   s.at("value_at_ref").get<double>(),
                                   s.at("ref").get<double>()});
        check_c1(pw);
        inst.payload = std::move(pw);
    } else if (kind == "triplets") {
        inst.payload = triplets_from(j.at("triplets"));
    } else {
        throw std::invalid_argument("instance_from_json: unknown payload kind");
    }
    return inst;
}

std::string triplets_to_json(const TripletSet& set, int indent) {
    json j;
    j["triplets"] = triplets_json(set);
    return j.dump(indent);
}

TripletSet triplets_from_json(const std::string& text) {
    const json j = json::parse(text);
    return triplets_from(j.contains("triplets") ? j.at("triplets") : j);
}

}  // namespace gdr
