// gdrates: worst-case rates of gradient descent on smooth functions with
// curvature in [mu, L], stepsize schedules, worst-case instances and
// tightness certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 domain or usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdr/engine.hpp"
#include "gdr/interpolation.hpp"
#include "gdr/rates.hpp"
#include "gdr/schedules.hpp"
#include "gdr/thresholds.hpp"
#include "gdr/worstcase.hpp"

using namespace gdr;
using nlohmann::json;

namespace {

int g_digits = 6;

std::string fmt(double v, int digits = -1) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits < 0 ? g_digits : digits, v);
    return buf;
}

std::vector<double> read_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file: " + path);
    std::vector<double> gls;
    double v;
    while (in >> v) gls.push_back(v);
    if (gls.empty()) throw std::runtime_error("schedule file holds no numbers: " + path);
    return gls;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

int cmd_rate(double kappa, std::optional<double> gl, const std::string& schedule_file,
             std::int64_t n, bool to_fn, bool as_json) {
    const NumeratorKind num =
        to_fn ? NumeratorKind::gap_to_fN : NumeratorKind::gap_to_fstar;
    RateBound rb{0.0, {RegimeKind::sublinear, 0}, num};
    std::vector<double> sched;
    if (!schedule_file.empty()) {
        sched = read_schedule_file(schedule_file);
        rb = denom_variable(sched, kappa, num);
        n = static_cast<std::int64_t>(sched.size());
    } else if (gl) {
        rb = denom_for(*gl, kappa, n, num);
        sched.assign(static_cast<std::size_t>(n), *gl);
    } else {
        throw CLI::ValidationError("rate", "either --gl or --schedule is required");
    }
    if (as_json) {
        json j{{"kappa", kappa},
               {"n", n},
               {"schedule", sched},
               {"denominator", rb.denominator},
               {"regime", rb.regime.label()},
               {"numerator", to_fn ? "gap_to_fN" : "gap_to_fstar"},
               {"bound_unit_gap", rb.bound(1.0)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kappa       = " << fmt(kappa) << "\n";
        std::cout << "n           = " << n << "\n";
        std::cout << "denominator = " << fmt(rb.denominator) << "\n";
        std::cout << "regime      = " << rb.regime.label() << "\n";
        std::cout << "bound(gap=1)= " << fmt(rb.bound(1.0)) << "\n";
    }
    return 0;
}

int cmd_thresholds(double kappa, std::int64_t kmax, bool csv) {
    const ThresholdTable table = threshold_table(kappa, kmax);
    if (csv) {
        std::cout << "k,gamma_bar\n0," << fmt(1.0) << "\n";
        for (const auto& [k, g] : table.values) std::cout << k << "," << fmt(g) << "\n";
    } else {
        std::cout << "gamma_bar_inf = " << fmt(table.gamma_bar_inf) << "\n";
        std::cout << "k=0  gamma_bar = " << fmt(1.0) << "\n";
        for (const auto& [k, g] : table.values)
            std::cout << "k=" << k << "  gamma_bar = " << fmt(g) << "\n";
    }
    return 0;
}

int cmd_opt_step(double kappa, std::optional<std::int64_t> n) {
    if (kappa >= 0.0) {
        if (!n) throw CLI::ValidationError("opt-step", "--n is required for kappa >= 0");
        const double g = kappa == 0.0 ? opt_const_convex(*n)
                                      : opt_const_strongly_convex(kappa, *n);
        std::cout << "optimal constant stepsize gamma_bar_N = " << fmt(g) << "\n";
        return 0;
    }
    const double gstar = opt_const_nonconvex_asymptotic(kappa);
    const double kb = kappa_bar();
    std::cout << "asymptotic optimum gamma_star = " << fmt(gstar) << "\n";
    std::cout << "kappa_bar = " << fmt(kb) << "  ("
              << (kappa <= kb ? "optimal for every N" : "asymptotic only") << ")\n";
    if (n) {
        const OptNumericResult r = opt_const_nonconvex_numeric(kappa, *n);
        std::cout << "numeric optimum at N=" << *n << ": gl = " << fmt(r.gl)
                  << ", denominator = " << fmt(r.denominator) << "\n";
    }
    return 0;
}

int cmd_schedule(double kappa, std::int64_t n, bool truncate, bool csv) {
    const StepsizeSchedule s =
        truncate ? truncated_schedule(kappa, n) : dynamic_sequence(kappa, n);
    if (csv) {
        std::cout << "i,gl\n";
        for (std::size_t i = 0; i < s.entries.size(); ++i)
            std::cout << i << "," << fmt(s.entries[i]) << "\n";
    } else {
        for (std::size_t i = 0; i < s.entries.size(); ++i)
            std::cout << "s_" << i << " = " << fmt(s.entries[i]) << "\n";
    }
    return 0;
}

int cmd_worstcase(double kappa, double l_upper, double gl, std::int64_t n, double gap,
                  const std::string& out) {
    CurvatureClass cls = CurvatureClass::from_kappa(kappa, l_upper);
    const WorstCaseInstance inst = select_worst_case(cls, gl, n, gap);
    const std::string text = instance_to_json(inst);
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        write_file(out, text);
        std::cout << "wrote " << out << " (regime " << inst.regime.label()
                  << (inst.conjectured ? ", CONJECTURED" : "") << ")\n";
    }
    return 0;
}

int cmd_simulate(const std::string& instance_file, const std::string& emit_triplets) {
    const WorstCaseInstance inst = instance_from_json(read_file(instance_file));
    const TightnessReport rep = tightness_report(inst);
    std::cout << "regime       = " << rep.regime
              << (rep.conjectured ? " (CONJECTURED)" : "") << "\n";
    std::cout << "denominator  = " << fmt(rep.denominator) << "\n";
    std::cout << "bound        = " << fmt(rep.bound) << "\n";
    std::cout << "achieved     = " << fmt(rep.achieved) << "\n";
    std::cout << "ratio        = " << fmt(rep.ratio) << "\n";
    std::cout << "interpolable = " << (rep.interpolable ? "yes" : "NO") << " (worst residual "
              << rep.worst_residual << ")\n";
    if (!emit_triplets.empty()) {
        const Trajectory traj = trajectory_of(inst);
        write_file(emit_triplets, triplets_to_json(traj.triplets));
        std::cout << "wrote " << emit_triplets << "\n";
    }
    const bool tight = rep.ratio >= 1.0 - 1e-6 && rep.ratio <= 1.0 + 1e-9;
    return (rep.interpolable && tight) ? 0 : 1;
}

int cmd_verify(const std::string& triplets_file, double mu, double l_upper, double tol) {
    CurvatureClass cls(mu, l_upper);
    const TripletSet set = triplets_from_json(read_file(triplets_file));
    const InterpReport rep = is_interpolable(set, cls, tol);
    std::cout << "pairs checked = " << set.size() * (set.size() - 1) << "\n";
    std::cout << "worst pair    = (" << rep.worst.i << ", " << rep.worst.j
              << "), scaled residual " << rep.worst.scaled_residual << "\n";
    std::cout << (rep.interpolable ? "PASS" : "FAIL") << "\n";
    return rep.interpolable ? 0 : 1;
}

void print_row(const std::vector<std::string>& cells, bool csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::cout << (csv ? "," : "  ");
        if (!csv) std::cout.width(12);
        std::cout << cells[i];
    }
    std::cout << "\n";
}

int cmd_tables(int which, bool csv) {
    if (which == 1) {
        print_row({"N", "gl=1", "gbar_N", "1+2N*gbar", "s_{N-1}", "dynamic", "ratio_pct"},
                  csv);
        for (std::int64_t n : {1, 2, 5, 10, 20, 30, 40, 50, 100}) {
            const double gb = opt_const_convex(n);
            const double opt = 1.0 + 2.0 * static_cast<double>(n) * gb;
            const double s = dynamic_sequence(0.0, n).entries.back();
            const double dyn = denom_dynamic_strongly_convex(0.0, n).denominator;
            print_row({std::to_string(n), std::to_string(1 + 2 * n), fmt(gb, 3),
                       fmt(opt, 3), fmt(s, 3), fmt(dyn, 3), fmt(100.0 * dyn / opt, 3)},
                      csv);
        }
        return 0;
    }
    if (which == 2) {
        print_row({"kappa", "N", "std_gl", "std_denom", "gbar_N", "optimal", "s_{N-1}",
                   "dynamic", "ratio_pct"},
                  csv);
        for (double kappa : {1e-3, 1e-4}) {
            for (std::int64_t n : {1, 2, 5, 10, 20, 30, 40, 50, 70}) {
                const double gb = opt_const_strongly_convex(kappa, n);
                const double opt = denom_strongly_convex(gb, kappa, n).denominator;
                const double s = dynamic_sequence(kappa, n).entries.back();
                const double dyn = denom_dynamic_strongly_convex(kappa, n).denominator;
                const double std_gl = 2.0 / (1.0 + kappa);
                const double std_denom =
                    denom_strongly_convex(std_gl - 1e-15, kappa, n).denominator;
                const int gd = kappa == 1e-4 ? 4 : 3;
                print_row({fmt(kappa, 4), std::to_string(n), fmt(std_gl, gd),
                           fmt(std_denom, 3), fmt(gb, gd), fmt(opt, 3), fmt(s, gd),
                           fmt(dyn, 3), fmt(100.0 * dyn / opt, 3)},
                          csv);
            }
        }
        return 0;
    }
    if (which == 3) {
        const double kappa = -1e-3;
        const double gstar = opt_const_nonconvex_asymptotic(kappa);
        print_row({"N", "g_star", "P_N^A", "(gl)*", "P_N^*", "min{s,g*}", "D_N",
                   "ratio_pct"},
                  csv);
        for (std::int64_t n : {1, 2, 5, 8, 9, 10, 20, 30, 40, 50, 100}) {
            const double pa = denom_nonconvex_const(gstar, kappa, n).denominator;
            const OptNumericResult opt = opt_const_nonconvex_numeric(kappa, n);
            const double mins = truncated_schedule(kappa, n).entries.back();
            const double dn = denom_dynamic_nonconvex(kappa, n).denominator;
            print_row({std::to_string(n), fmt(gstar, 3), fmt(pa, 3), fmt(opt.gl, 3),
                       fmt(opt.denominator, 3), fmt(mins, 3), fmt(dn, 3),
                       fmt(100.0 * dn / opt.denominator, 3)},
                      csv);
        }
        return 0;
    }
    throw CLI::ValidationError("tables", "--which must be 1, 2 or 3");
}

int cmd_figdata(const std::string& which, const std::string& out) {
    std::ostringstream os;
    if (which == "p-term") {
        // leading term gl * p(gl, kappa*gl) over the stepsize axis
        const std::vector<double> kappas{-4.0, -1.0, -0.5, -0.1, -1e-6};
        os << "gl";
        for (double k : kappas) os << ",kappa_" << k;
        os << "\n";
        for (int i = 1; i < 200; ++i) {
            const double gl = 2.0 * i / 200.0;
            os << fmt(gl, 4);
            for (double k : kappas) {
                const double ginf = gamma_bar_inf(k);
                os << ",";
                if (gl < ginf)
                    os << fmt(gl * p_coeff(gl, k * gl), 6);
            }
            os << "\n";
        }
    } else if (which == "thresholds") {
        const std::vector<double> kappas{-1.0, -0.5, -0.1, 0.0, 0.1, 0.5};
        os << "k";
        for (double k : kappas) os << ",kappa_" << k;
        os << "\n";
        for (std::int64_t k = 1; k <= 30; ++k) {
            os << k;
            for (double kap : kappas) os << "," << fmt(gamma_bar(k, kap), 6);
            os << "\n";
        }
    } else if (which == "t-curves") {
        // T_k over gl for kappa = -0.5
        os << "gl";
        for (int k = 1; k <= 5; ++k) os << ",T_" << k;
        os << "\n";
        for (int i = 1; i < 400; ++i) {
            const double gl = 1.0 + 0.9999 * i / 400.0;
            os << fmt(gl, 5);
            for (std::int64_t k = 1; k <= 5; ++k) os << "," << fmt(t_k(gl, -0.5, k), 8);
            os << "\n";
        }
    } else if (which == "opt-compare") {
        // guaranteed per-step coefficients of the three stepsize picks
        os << "kappa,r_gstar,r_2_sqrt3,r_1\n";
        for (int i = 1; i <= 60; ++i) {
            const double kappa = -std::pow(10.0, 1.0 - 3.0 * i / 60.0);  // -10 .. -0.01
            const double gs = opt_const_nonconvex_asymptotic(kappa);
            const double r1 = gs * p_coeff(gs, kappa * gs);
            const double g2 = 2.0 / std::sqrt(3.0);
            const double r2 = g2 * p_coeff(g2, kappa * g2);
            const double r3 = 1.0 * p_coeff(1.0, kappa);
            os << fmt(kappa, 6) << "," << fmt(r1, 6) << "," << fmt(r2, 6) << ","
               << fmt(r3, 6) << "\n";
        }
    } else {
        throw CLI::ValidationError("figdata",
                                   "--which must be p-term|thresholds|t-curves|opt-compare");
    }
    if (out.empty())
        std::cout << os.str();
    else
        write_file(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"worst-case rates, schedules and tight instances for gradient descent"};
    app.require_subcommand(1);
    app.add_option("--digits", g_digits, "printed precision")->capture_default_str();

    // rate
    auto* rate = app.add_subcommand("rate", "evaluate a worst-case denominator");
    double kappa = 0.0;
    std::optional<double> gl;
    std::string schedule_file;
    std::int64_t n = 1;
    bool to_fn = false, as_json = false;
    rate->add_option("--kappa", kappa, "curvature ratio mu/L")->required();
    rate->add_option("--gl", gl, "normalized constant stepsize gamma*L");
    rate->add_option("--schedule", schedule_file, "file of per-step gl values");
    rate->add_option("--n", n, "number of iterations");
    rate->add_flag("--to-fn", to_fn, "denominator for the f0 - fN numerator");
    rate->add_flag("--json", as_json, "JSON output");

    // thresholds
    auto* thr = app.add_subcommand("thresholds", "tabulate the stepsize thresholds");
    double t_kappa = 0.0;
    std::int64_t kmax = 10;
    bool t_csv = false;
    thr->add_option("--kappa", t_kappa)->required();
    thr->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
    thr->add_flag("--csv", t_csv);

    // opt-step
    auto* opt = app.add_subcommand("opt-step", "optimal constant stepsizes");
    double o_kappa = 0.0;
    std::optional<std::int64_t> o_n;
    opt->add_option("--kappa", o_kappa)->required();
    opt->add_option("--n", o_n);

    // schedule
    auto* sch = app.add_subcommand("schedule", "dynamic stepsize sequence");
    double s_kappa = 0.0;
    std::int64_t s_n = 10;
    bool s_trunc = false, s_csv = false;
    sch->add_option("--kappa", s_kappa)->required();
    sch->add_option("--n", s_n)->required();
    sch->add_flag("--truncate", s_trunc, "truncate at gamma_star (kappa < 0)");
    sch->add_flag("--csv", s_csv);

    // worstcase
    auto* wc = app.add_subcommand("worstcase", "emit a matching worst-case instance");
    double w_kappa = 0.0, w_gl = 1.0, w_gap = 1.0, w_l = 1.0;
    std::int64_t w_n = 1;
    std::string w_out;
    wc->add_option("--kappa", w_kappa)->required();
    wc->add_option("--gl", w_gl)->required();
    wc->add_option("--n", w_n)->required();
    wc->add_option("--gap", w_gap)->capture_default_str();
    wc->add_option("--L", w_l)->capture_default_str();
    wc->add_option("--out", w_out, "write the instance JSON here");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run an instance and report tightness");
    std::string sim_file, sim_emit;
    sim->add_option("--instance", sim_file)->required();
    sim->add_option("--emit-triplets", sim_emit, "write the trajectory triplets");

    // verify
    auto* ver = app.add_subcommand("verify", "interpolation-condition check");
    std::string v_file;
    double v_mu = 0.0, v_l = 1.0, v_tol = 1e-8;
    ver->add_option("--triplets", v_file)->required();
    ver->add_option("--mu", v_mu)->required();
    ver->add_option("--L", v_l)->required();
    ver->add_option("--tol", v_tol)->capture_default_str();

    // tables / figdata
    auto* tab = app.add_subcommand("tables", "reproduce the comparison tables");
    int which_table = 1;
    bool tab_csv = false;
    tab->add_option("--which", which_table)->required()->check(CLI::Range(1, 3));
    tab->add_flag("--csv", tab_csv);

    auto* fig = app.add_subcommand("figdata", "emit plot-ready CSV data");
    std::string fig_which, fig_out;
    fig->add_option("--which", fig_which)->required();
    fig->add_option("--out", fig_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rate->parsed()) return cmd_rate(kappa, gl, schedule_file, n, to_fn, as_json);
        if (thr->parsed()) return cmd_thresholds(t_kappa, kmax, t_csv);
        if (opt->parsed()) return cmd_opt_step(o_kappa, o_n);
        if (sch->parsed()) return cmd_schedule(s_kappa, s_n, s_trunc, s_csv);
        if (wc->parsed()) return cmd_worstcase(w_kappa, w_l, w_gl, w_n, w_gap, w_out);
        if (sim->parsed()) return cmd_simulate(sim_file, sim_emit);
        if (ver->parsed()) return cmd_verify(v_file, v_mu, v_l, v_tol);
        if (tab->parsed()) return cmd_tables(which_table, tab_csv);
        if (fig->parsed()) return cmd_figdata(fig_which, fig_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
