#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fnkgs/assembly.hpp"
#include "fnkgs/problems.hpp"

namespace fnkgs {

struct SpectralState {
    CVec U;
    Vec Phi;
    Vec Psi;
    double t = 0.0;
    double ln_p = 0.0;  // auxiliary variable log, used by the ESAV stepper
};

struct InvariantSample {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double rm = 0.0;
    double re = 0.0;
    int iterations = 0;
};

double mass(const OperatorSet& ops, const CVec& U);
double norm_sq(const OperatorSet& ops, const CVec& c);       // c^H M c
double norm_sq(const OperatorSet& ops, const Vec& c);
double seminorm_sq(const OperatorSet& ops, const CVec& c);   // c^H S c
double seminorm_sq(const OperatorSet& ops, const Vec& c);

// ||Psi||^2 + gamma |Phi|^2_{a/2} + eta^2 ||Phi||^2 + lambda |U|^2_{a/2}
// - 2 int (kappa1 |U|^2 + kappa2 |U|^4) Phi dx
double energy_cn(const ProblemSpec& prob, const OperatorSet& ops, const CVec& U,
                 const Vec& Phi, const Vec& Psi);

// Quadratic terms as energy_cn with the integral replaced by -ln(P).
double energy_esav(const ProblemSpec& prob, const OperatorSet& ops, const CVec& U,
                   const Vec& Phi, const Vec& Psi, double ln_p);

// Evaluation grid for error norms: M+1 mapped Lobatto points, M = mu_factor * N.
struct ErrorGrid {
    QuadRule rule;
    std::vector<double> x;  // mapped nodes
    Mat table;              // basis values for the run's mode count
    double jacobian = 1.0;
};

ErrorGrid make_error_grid(int N, const DomainMap& map, int mu_factor);

struct ErrorPair {
    double l2 = 0.0;
    double linf = 0.0;
};

// Weighted-quadrature L2 and pointwise max of a - b on the grid.
ErrorPair error_norms(const ErrorGrid& grid, const CVec& a_vals, const CVec& b_vals);
ErrorPair error_norms(const ErrorGrid& grid, const Vec& a_vals, const Vec& b_vals);

CVec eval_on_grid(const ErrorGrid& grid, const CVec& coeffs);
Vec eval_on_grid(const ErrorGrid& grid, const Vec& coeffs);
CVec eval_on_grid(const ErrorGrid& grid, const std::function<Cplx(double)>& f);
Vec eval_on_grid(const ErrorGrid& grid, const std::function<double(double)>& f);

// rate_k = log(e_{k-1}/e_k) / log(h_{k-1}/h_k); entry 0 (and any undefined
// quotient) is NaN, printed as absent downstream.
std::vector<double> convergence_rate(const std::vector<double>& errors,
                                     const std::vector<double>& steps);

enum class FailureKind { none, non_convergence, divergence, overflow, amplitude };

struct BlowupRecord {
    double t = 0.0;
    FailureKind kind = FailureKind::none;
    std::string detail;
};

struct StepOutcomeInfo {
    FailureKind kind = FailureKind::none;
    double t = 0.0;
    double residual = 0.0;
    double sup_u = 0.0;  // max |U| over the LGL grid after the step
};

// Classifies a step outcome; any failure kind, or a bounded state crossing the
// amplitude threshold, yields a blow-up record at that time.
std::optional<BlowupRecord> detect_blowup(const StepOutcomeInfo& info,
                                          double amplitude_threshold = 1e8);

}  // namespace fnkgs
