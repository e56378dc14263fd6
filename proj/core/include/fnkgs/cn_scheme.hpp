#pragma once

#include <memory>

#include "fnkgs/assembly.hpp"
#include "fnkgs/diagnostics.hpp"
#include "fnkgs/linalg.hpp"
#include "fnkgs/problems.hpp"

namespace fnkgs {

struct StepStats {
    int iterations = 0;
    double residual = 0.0;
};

enum class StepStatus { ok, non_convergence, divergence, overflow };

struct StepReport {
    StepStatus status = StepStatus::ok;
    StepStats stats;
};

// Crank-Nicolson stepper with a fixed-point solve of the coupled nonlinear
// stage. Factorizations of the shifted mass/stiffness systems are built once
// per (tau, operator set) and reused for every step.
class CnStepper {
  public:
    CnStepper(const ProblemSpec& prob, const OperatorSet& ops, double tau,
              double tol = 1e-14, int max_iter = 200);

    StepReport step();

    const SpectralState& state() const { return state_; }
    void set_state(const SpectralState& s);

    // Current solution sampled on the LGL grid of ops, kept in step with state.
    const CVec& u_grid() const { return u_grid_; }
    const Vec& phi_grid() const { return phi_grid_; }

    double tau() const { return tau_; }
    const OperatorSet& ops() const { return *ops_; }
    const ProblemSpec& problem() const { return prob_; }

  private:
    ProblemSpec prob_;
    const OperatorSet* ops_;
    double tau_;
    double tol_;
    int max_iter_;

    CMat u_rhs_mat_;   // i M + (lambda tau / 4) S
    Mat phi_rhs_mat_;  // M - (tau^2/4)(gamma S + eta^2 M)
    std::unique_ptr<LuCplx> u_lu_;   // i M - (lambda tau / 4) S
    std::unique_ptr<LuReal> phi_lu_; // M + (tau^2/4)(gamma S + eta^2 M)

    SpectralState state_;
    SpectralState prev_;
    bool have_prev_ = false;

    CVec u_grid_;   // grid values of the current state, kept in sync
    Vec phi_grid_;

    void refresh_grids();
};

}  // namespace fnkgs
