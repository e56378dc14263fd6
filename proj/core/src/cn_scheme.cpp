#include "fnkgs/cn_scheme.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fnkgs {

CnStepper::CnStepper(const ProblemSpec& prob, const OperatorSet& ops, double tau,
                     double tol, int max_iter)
    : prob_(prob), ops_(&ops), tau_(tau), tol_(tol), max_iter_(max_iter) {
    if (!(tau > 0.0)) throw std::invalid_argument("CnStepper: tau must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("CnStepper: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("CnStepper: max_iter must be positive");

    const Cplx iu(0.0, 1.0);
    CMat Mc = ops.M.cast<Cplx>();
    CMat Sc = ops.S.cast<Cplx>();
    double cu = prob.lambda * tau / 4.0;
    u_rhs_mat_ = iu * Mc + cu * Sc;
    u_lu_ = std::make_unique<LuCplx>(CMat(iu * Mc - cu * Sc));

    Mat shift = (tau * tau / 4.0) * (prob.gamma * ops.S + prob.eta * prob.eta * ops.M);
    phi_rhs_mat_ = ops.M - shift;
    phi_lu_ = std::make_unique<LuReal>(Mat(ops.M + shift));

    state_.U = CVec::Zero(ops.K);
    state_.Phi = Vec::Zero(ops.K);
    state_.Psi = Vec::Zero(ops.K);
    refresh_grids();
}

void CnStepper::set_state(const SpectralState& s) {
    state_ = s;
    have_prev_ = false;
    refresh_grids();
}

void CnStepper::refresh_grids() {
    u_grid_ = mat_apply(ops_->V, state_.U);
    phi_grid_ = ops_->V * state_.Phi;
}

StepReport CnStepper::step() {
    StepReport rep;
    const Mat& V = ops_->V;
    const Mat& M = ops_->M;

    CVec rhs_u_const = u_rhs_mat_ * state_.U;
    Vec rhs_phi_const = phi_rhs_mat_ * state_.Phi + tau_ * (M * state_.Psi);

    CVec Us = have_prev_ ? extrapolate_guess(state_.U, prev_.U) : state_.U;
    Vec Phis = have_prev_ ? extrapolate_guess(state_.Phi, prev_.Phi) : state_.Phi;

    CVec U_new = Us;
    Vec Phi_new = Phis;
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int s = 0; s < max_iter_; ++s) {
        CVec Us_vals = mat_apply(V, Us);
        Vec Phis_vals = V * Phis;
        NonlinearVectors nl = nonlinear_vectors(*ops_, u_grid_, Us_vals, phi_grid_, Phis_vals);

        CVec rhs_u = rhs_u_const - (tau_ / 4.0) * (prob_.kappa1 * nl.N1 + prob_.kappa2 * nl.N2);
        U_new = u_lu_->solve(rhs_u);
        Vec rhs_phi =
            rhs_phi_const + (tau_ * tau_ / 4.0) * (prob_.kappa1 * nl.N3 + prob_.kappa2 * nl.N4);
        Phi_new = phi_lu_->solve(rhs_phi);

        residual = m_norm(M, CVec(U_new - Us)) + m_norm(M, Vec(Phi_new - Phis));
        Us = U_new;
        Phis = Phi_new;
        rep.stats.iterations = s + 1;
        if (!std::isfinite(residual)) break;
        if (residual <= tol_) {
            converged = true;
            break;
        }
    }
    rep.stats.residual = residual;
    if (std::isnan(residual)) {
        rep.status = StepStatus::divergence;
        return rep;
    }
    if (std::isinf(residual)) {
        rep.status = StepStatus::overflow;
        return rep;
    }
    if (!converged) {
        rep.status = StepStatus::non_convergence;
        return rep;
    }

    prev_ = state_;
    have_prev_ = true;
    state_.U = U_new;
    state_.Phi = Phi_new;
    state_.Psi = (2.0 / tau_) * (Phi_new - prev_.Phi) - prev_.Psi;
    state_.t += tau_;
    refresh_grids();
    return rep;
}

}  // namespace fnkgs
