#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fnkgs/problems.hpp"
#include "fnkgs/report_io.hpp"
#include "fnkgs/runner.hpp"

namespace {

using namespace fnkgs;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitBlowup = 4;

struct Options {
    std::string scheme = "cn";
    std::string example = "example1";
    std::string init = "b_proj";
    std::string out = "out";
    double alpha = 1.5;
    double tau = 0.05;
    double T = 1.0;
    double tol = 1e-14;
    double kappa2 = 0.0;
    bool kappa2_set = false;
    int N = 150;
    int max_iter = 200;
    int mu_factor = 3;
    int sample_every = 1;
    double tau_ref = 0.0;  // 0: pick min(tau_list)/10
    int n_ref = 0;         // 0: pick max(150, max(n_list))
    std::vector<double> tau_list;
    std::vector<int> n_list;
    std::vector<double> snapshot_times;
};

void add_common_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--scheme", o.scheme, "Time integrator")
        ->check(CLI::IsMember({"cn", "esav"}))
        ->capture_default_str();
    cmd->add_option("--example", o.example, "Named problem")
        ->check(CLI::IsMember({"example1", "example2"}))
        ->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "Fractional order in (1,2]")->capture_default_str();
    cmd->add_option("--tau", o.tau, "Time step")->capture_default_str();
    cmd->add_option("--N", o.N, "Polynomial degree bound")->capture_default_str();
    cmd->add_option("--T", o.T, "Final time")->capture_default_str();
    cmd->add_option("--tol", o.tol, "Fixed-point stopping tolerance")->capture_default_str();
    cmd->add_option("--kappa2", o.kappa2, "Quartic coupling strength");
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
    cmd->add_option("--init", o.init, "Initial projection")
        ->check(CLI::IsMember({"b_proj", "l2"}))
        ->capture_default_str();
    cmd->add_option("--mu-factor", o.mu_factor, "Error-grid density factor")
        ->capture_default_str();
    cmd->add_option("--max-iter", o.max_iter, "Fixed-point iteration cap")
        ->capture_default_str();
    cmd->set_config("--config", "", "Key=value config file; flags override");
}

int validate(const Options& o) {
    auto fail = [](const std::string& msg) {
        std::fprintf(stderr, "config error: %s\n", msg.c_str());
        return kExitConfig;
    };
    if (!(o.alpha > 1.0 && o.alpha <= 2.0)) return fail("alpha must lie in (1,2]");
    if (!(o.tau > 0.0)) return fail("tau must be positive");
    if (o.N < 3) return fail("N must be at least 3");
    if (o.T < 0.0) return fail("T must be nonnegative");
    if (!(o.tol > 0.0)) return fail("tol must be positive");
    if (o.kappa2_set && o.kappa2 < 0.0) return fail("kappa2 must be nonnegative");
    if (o.max_iter < 1) return fail("max_iter must be positive");
    if (o.mu_factor < 2) return fail("mu_factor must be at least 2");
    if (o.sample_every < 1) return fail("sample_every must be positive");
    for (double t : o.tau_list)
        if (!(t > 0.0)) return fail("tau-list entries must be positive");
    for (int n : o.n_list)
        if (n < 3) return fail("n-list entries must be at least 3");
    return kExitOk;
}

ProblemSpec build_problem(const Options& o) {
    ProblemSpec p =
        o.example == "example2" ? example2(o.alpha, o.kappa2) : example1(o.alpha);
    if (o.example != "example2" && o.kappa2_set) p.kappa2 = o.kappa2;
    p.T = o.T;
    return p;
}

RunConfig build_config(const Options& o) {
    RunConfig c;
    c.scheme = o.scheme == "esav" ? Scheme::esav : Scheme::cn;
    c.tau = o.tau;
    c.N = o.N;
    c.T = o.T;
    c.tol = o.tol;
    c.max_iter = o.max_iter;
    c.init = o.init == "l2" ? InitMode::l2 : InitMode::b_proj;
    c.mu_factor = o.mu_factor;
    c.sample_every = o.sample_every;
    c.snapshot_times = o.snapshot_times;
    return c;
}

int failure_exit(const BlowupRecord& rec) {
    return rec.kind == FailureKind::non_convergence ? kExitNonConvergence : kExitBlowup;
}

int cmd_solve(const Options& o) {
    ProblemSpec prob = build_problem(o);
    RunConfig cfg = build_config(o);
    OperatorSet ops(cfg.N, prob.map, prob.alpha);
    RunResult res = run_simulation(prob, ops, cfg);

    write_invariants_csv(o.out + "/invariants.csv", res);
    write_snapshots(o.out, res);
    write_summary_json(o.out + "/summary.json", prob, cfg, res);

    if (res.blowup) {
        std::fprintf(stderr, "run stopped at t=%.6f: %s\n", res.blowup->t,
                     res.blowup->detail.c_str());
        return failure_exit(*res.blowup);
    }
    return kExitOk;
}

int cmd_converge_time(const Options& o) {
    ProblemSpec prob = build_problem(o);
    RunConfig cfg = build_config(o);
    std::vector<double> taus = o.tau_list;
    std::sort(taus.begin(), taus.end(), std::greater<>());
    bool use_exact = prob.has_exact;
    double tau_ref =
        o.tau_ref > 0.0 ? o.tau_ref : *std::min_element(taus.begin(), taus.end()) / 10.0;
    ConvergenceTable table = time_convergence(prob, cfg, taus, tau_ref, use_exact);
    write_convergence_csv(o.out + "/convergence.csv", table);
    return kExitOk;
}

int cmd_converge_space(const Options& o) {
    ProblemSpec prob = build_problem(o);
    RunConfig cfg = build_config(o);
    std::vector<int> ns = o.n_list;
    std::sort(ns.begin(), ns.end());
    bool use_exact = prob.has_exact;
    int n_ref = o.n_ref > 0 ? o.n_ref : std::max(150, *std::max_element(ns.begin(), ns.end()));
    double tau_ref = o.tau_ref > 0.0 ? o.tau_ref : o.tau / 10.0;
    ConvergenceTable table = space_convergence(prob, cfg, ns, n_ref, tau_ref, use_exact);
    write_convergence_csv(o.out + "/convergence.csv", table);
    return kExitOk;
}

int cmd_compare(const Options& o) {
    ProblemSpec prob = build_problem(o);
    RunConfig cfg = build_config(o);
    std::vector<double> taus = o.tau_list;
    std::sort(taus.begin(), taus.end(), std::greater<>());
    bool use_exact = prob.has_exact;
    double tau_ref =
        o.tau_ref > 0.0 ? o.tau_ref : *std::min_element(taus.begin(), taus.end()) / 10.0;
    std::vector<CompareRow> rows = compare_schemes(prob, cfg, taus, tau_ref, use_exact);
    write_compare_csv(o.out + "/compare.csv", rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendre spectral Galerkin solvers for the coupled fractional "
                 "Klein-Gordon-Schrodinger system"};
    app.require_subcommand(1);

    Options o;
    auto* solve = app.add_subcommand("solve", "Run one simulation and record invariants");
    add_common_options(solve, o);
    solve->add_option("--sample-every", o.sample_every,
                      "Record invariants every k-th step")
        ->capture_default_str();
    solve->add_option("--snapshots", o.snapshot_times, "Times to dump solution profiles")
        ->delimiter(',');

    auto* ct = app.add_subcommand("converge-time", "Temporal convergence sweep");
    add_common_options(ct, o);
    ct->add_option("--tau-list", o.tau_list, "Step sizes to sweep")->required()->delimiter(',');
    ct->add_option("--tau-ref", o.tau_ref,
                   "Reference step (default: min/10, exact solution at alpha=2)");

    auto* cs = app.add_subcommand("converge-space", "Spatial convergence sweep");
    add_common_options(cs, o);
    cs->add_option("--n-list", o.n_list, "Degree bounds to sweep")->required()->delimiter(',');
    cs->add_option("--n-ref", o.n_ref, "Reference degree bound (default: max(150, n-list))");
    cs->add_option("--tau-ref", o.tau_ref, "Reference step (default: tau/10)");

    auto* cp = app.add_subcommand("compare", "CN vs ESAV error and cost sweep");
    add_common_options(cp, o);
    cp->add_option("--tau-list", o.tau_list, "Step sizes to sweep")->required()->delimiter(',');
    cp->add_option("--tau-ref", o.tau_ref, "Reference step for the shared reference run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    CLI::App* cmd = app.get_subcommands().front();
    o.kappa2_set = cmd->count("--kappa2") > 0;

    if (int rc = validate(o); rc != kExitOk) return rc;

    try {
        if (cmd == solve) return cmd_solve(o);
        if (cmd == ct) return cmd_converge_time(o);
        if (cmd == cs) return cmd_converge_space(o);
        return cmd_compare(o);
    } catch (const RunFailure& e) {
        std::fprintf(stderr, "error: %s (t=%.6f)\n", e.what(), e.record.t);
        return failure_exit(e.record);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
