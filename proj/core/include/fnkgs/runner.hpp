#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnkgs/assembly.hpp"
#include "fnkgs/cn_scheme.hpp"
#include "fnkgs/diagnostics.hpp"
#include "fnkgs/esav_scheme.hpp"
#include "fnkgs/problems.hpp"

namespace fnkgs {

enum class Scheme { cn, esav };

std::string scheme_name(Scheme s);

struct RunConfig {
    Scheme scheme = Scheme::cn;
    double tau = 0.05;
    int N = 150;
    double T = 1.0;
    double tol = 1e-14;
    int max_iter = 200;
    InitMode init = InitMode::b_proj;
    int mu_factor = 3;
    int sample_every = 1;              // record invariants every k-th step
    std::vector<double> snapshot_times;
};

// Projects (u0, phi0, phi1) into the solution space and seeds the auxiliary
// variable log from the projected grid values.
SpectralState make_initial_state(const ProblemSpec& prob, const OperatorSet& ops,
                                 InitMode init);

struct RunResult {
    std::vector<InvariantSample> invariants;
    SpectralState final_state;
    std::optional<BlowupRecord> blowup;
    double cpu_seconds = 0.0;  // stepping loop only
    double assembly_seconds = 0.0;
    long steps_taken = 0;
    int max_iterations = 0;

    struct Snapshot {
        double t;
        std::vector<double> x;
        CVec u;
        Vec phi;
    };
    std::vector<Snapshot> snapshots;

    bool completed() const { return !blowup.has_value(); }
};

RunResult run_simulation(const ProblemSpec& prob, const OperatorSet& ops,
                         const RunConfig& cfg);

// Thrown by the sweep drivers when a constituent run stops early; carries the
// record so callers can classify the failure.
struct RunFailure : std::runtime_error {
    BlowupRecord record;
    explicit RunFailure(const BlowupRecord& r)
        : std::runtime_error("run stopped early: " + r.detail), record(r) {}
};

enum class SweepKind { time, space };

struct ConvergenceRow {
    double tau = 0.0;
    int N = 0;
    double err_u_l2 = 0.0;
    double err_phi_l2 = 0.0;
    double err_phi_linf = 0.0;
    double rate_u = 0.0;
    double rate_phi = 0.0;
    double rate_linf = 0.0;
    double cpu_seconds = 0.0;
};

struct ConvergenceTable {
    SweepKind sweep = SweepKind::time;
    std::vector<ConvergenceRow> rows;
    bool has_rates = false;  // single-entry sweeps carry no rate columns
};

// Errors at t = T for each tau against a reference: the exact solution when
// use_exact is set and available, otherwise a run at tau_ref on the same
// spatial grid.
ConvergenceTable time_convergence(const ProblemSpec& prob, const RunConfig& base,
                                  const std::vector<double>& taus, double tau_ref,
                                  bool use_exact = false);

// Errors at t = T over a sweep of degree bounds against a fine reference
// (n_ref, tau_ref), or the exact solution when use_exact is set.
ConvergenceTable space_convergence(const ProblemSpec& prob, const RunConfig& base,
                                   const std::vector<int>& n_list, int n_ref,
                                   double tau_ref, bool use_exact = false);

struct CompareRow {
    double tau = 0.0;
    double cn_err = 0.0;    // ||u - U|| + ||phi - Phi|| at t = T
    double esav_err = 0.0;
    double cn_cpu_seconds = 0.0;
    double esav_cpu_seconds = 0.0;
    double cn_seconds_per_step = 0.0;
    double esav_seconds_per_step = 0.0;
};

// CN and ESAV side by side on a shared tau sweep; errors against a common CN
// reference at tau_ref (exact solution when available and use_exact is set).
std::vector<CompareRow> compare_schemes(const ProblemSpec& prob, const RunConfig& base,
                                        const std::vector<double>& taus, double tau_ref,
                                        bool use_exact = false);

}  // namespace fnkgs
