#pragma once

#include <memory>

#include "fnkgs/assembly.hpp"
#include "fnkgs/cn_scheme.hpp"
#include "fnkgs/diagnostics.hpp"
#include "fnkgs/linalg.hpp"
#include "fnkgs/problems.hpp"

namespace fnkgs {

// ln P(0) = 2 * int (kappa1 |u0|^2 + kappa2 |u0|^4) phi0 dx, evaluated from
// the projected grid values so the discrete invariant starts exactly here.
double esav_init(const ProblemSpec& prob, const OperatorSet& ops, const CVec& u_grid,
                 const Vec& phi_grid);

struct FgScaled {
    Vec f;  // (kappa1 + 2 kappa2 |u~|^2) * P/exp(I)  on the grid
    Vec g;  // (kappa1 |u~|^2 + kappa2 |u~|^4) * P/exp(I)
    bool overflow = false;
};

// Scaled auxiliary factors at extrapolated grid values; the ratio is formed in
// log space and flagged as overflow when |ln p - I| exceeds the exp() range.
FgScaled compute_fg_scaled(const ProblemSpec& prob, const OperatorSet& ops,
                           const CVec& u_tilde_grid, const Vec& phi_tilde_grid,
                           double ln_p_tilde);

// Exponential-SAV stepper: two linear solves per step, no iteration, with a
// fixed-point startup step that freezes midpoint grid values. The linear
// systems reuse the Crank-Nicolson factorizations.
class EsavStepper {
  public:
    EsavStepper(const ProblemSpec& prob, const OperatorSet& ops, double tau,
                double tol = 1e-14, int max_iter = 200);

    StepReport step();

    const SpectralState& state() const { return state_; }
    void set_state(const SpectralState& s);

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

    std::unique_ptr<LuCplx> u_lu_;
    std::unique_ptr<LuReal> phi_lu_;
    CMat u_rhs_mat_;
    Mat phi_rhs_mat_;

    SpectralState state_;
    SpectralState prev_;
    bool have_prev_ = false;

    CVec u_grid_, prev_u_grid_;
    Vec phi_grid_, prev_phi_grid_;

    StepReport startup_step();
    StepReport main_step();
    void refresh_grids();
};

}  // namespace fnkgs
