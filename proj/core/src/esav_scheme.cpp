#include "fnkgs/esav_scheme.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fnkgs {

namespace {

double logaddexp(double a, double b) {
    double m = std::max(a, b);
    if (!std::isfinite(m)) return m;
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

Vec coupling_density(const ProblemSpec& prob, const Vec& abs2) {
    return prob.kappa1 * abs2 + prob.kappa2 * abs2.cwiseProduct(abs2);
}

}  // namespace

double esav_init(const ProblemSpec& prob, const OperatorSet& ops, const CVec& u_grid,
                 const Vec& phi_grid) {
    Vec q = coupling_density(prob, u_grid.cwiseAbs2());
    return 2.0 * integrate(ops, q.cwiseProduct(phi_grid));
}

FgScaled compute_fg_scaled(const ProblemSpec& prob, const OperatorSet& ops,
                           const CVec& u_tilde_grid, const Vec& phi_tilde_grid,
                           double ln_p_tilde) {
    Vec abs2 = u_tilde_grid.cwiseAbs2();
    Vec q = coupling_density(prob, abs2);
    double I = 2.0 * integrate(ops, q.cwiseProduct(phi_tilde_grid));
    double d = ln_p_tilde - I;
    FgScaled out;
    if (!std::isfinite(d) || std::abs(d) > 700.0) {
        out.overflow = true;
        return out;
    }
    double ratio = std::exp(d);
    out.f = ratio * (prob.kappa1 + (2.0 * prob.kappa2) * abs2.array()).matrix();
    out.g = ratio * q;
    return out;
}

EsavStepper::EsavStepper(const ProblemSpec& prob, const OperatorSet& ops, double tau,
                         double tol, int max_iter)
    : prob_(prob), ops_(&ops), tau_(tau), tol_(tol), max_iter_(max_iter) {
    if (!(tau > 0.0)) throw std::invalid_argument("EsavStepper: tau must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("EsavStepper: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("EsavStepper: max_iter must be positive");

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

void EsavStepper::set_state(const SpectralState& s) {
    state_ = s;
    have_prev_ = false;
    refresh_grids();
}

void EsavStepper::refresh_grids() {
    u_grid_ = mat_apply(ops_->V, state_.U);
    phi_grid_ = ops_->V * state_.Phi;
}

StepReport EsavStepper::step() { return have_prev_ ? main_step() : startup_step(); }

// One linearized pass shared by both step flavors: solve for the new fields
// from scaled factors frozen at (u_f, phi_f), then advance the auxiliary log
// by the discrete increment.
namespace {

struct StagePass {
    CVec U;
    Vec Phi;
    double ln_p;
    CVec u_vals;
    Vec phi_vals;
    bool finite;
};

StagePass stage_solve(const OperatorSet& ops, const LuCplx& u_lu, const LuReal& phi_lu,
                      double tau, const CVec& rhs_u_const, const Vec& rhs_phi_const,
                      const FgScaled& fg, const CVec& u_f, const Vec& phi_f,
                      const CVec& u_old_vals, const Vec& phi_old_vals, double ln_p_old) {
    StagePass out;
    CVec fuphi = (u_f.array() * fg.f.cwiseProduct(phi_f).array().cast<Cplx>()).matrix();
    out.U = u_lu.solve(CVec(rhs_u_const - tau * galerkin_rhs(ops, fuphi)));
    out.Phi = phi_lu.solve(Vec(rhs_phi_const + (tau * tau / 2.0) * galerkin_rhs(ops, fg.g)));
    out.finite = out.U.allFinite() && out.Phi.allFinite();
    if (!out.finite) return out;

    out.u_vals = mat_apply(ops.V, out.U);
    out.phi_vals = ops.V * out.Phi;
    CVec du = (out.u_vals - u_old_vals) / tau;
    Vec dphi = (out.phi_vals - phi_old_vals) / tau;
    double jac = ops.map.jacobian();
    double ip_u = jac * (ops.w.array() * (fuphi.array() * du.array().conjugate()).real()).sum();
    double ip_phi = jac * (ops.w.array() * fg.g.array() * dphi.array()).sum();
    out.ln_p = ln_p_old + tau * (4.0 * ip_u + 2.0 * ip_phi);
    return out;
}

}  // namespace

StepReport EsavStepper::main_step() {
    StepReport rep;
    rep.stats.iterations = 1;

    CVec u_t = 1.5 * u_grid_ - 0.5 * prev_u_grid_;
    Vec phi_t = 1.5 * phi_grid_ - 0.5 * prev_phi_grid_;
    double ln_p_t = 1.5 * state_.ln_p - 0.5 * prev_.ln_p;

    FgScaled fg = compute_fg_scaled(prob_, *ops_, u_t, phi_t, ln_p_t);
    if (fg.overflow) {
        rep.status = StepStatus::overflow;
        return rep;
    }

    CVec rhs_u_const = u_rhs_mat_ * state_.U;
    Vec rhs_phi_const = phi_rhs_mat_ * state_.Phi + tau_ * (ops_->M * state_.Psi);
    StagePass p = stage_solve(*ops_, *u_lu_, *phi_lu_, tau_, rhs_u_const, rhs_phi_const, fg,
                              u_t, phi_t, u_grid_, phi_grid_, state_.ln_p);
    if (!p.finite || !std::isfinite(p.ln_p)) {
        rep.status = StepStatus::divergence;
        return rep;
    }

    prev_ = state_;
    prev_u_grid_ = u_grid_;
    prev_phi_grid_ = phi_grid_;
    state_.Psi = (2.0 / tau_) * (p.Phi - state_.Phi) - state_.Psi;
    state_.U = p.U;
    state_.Phi = p.Phi;
    state_.ln_p = p.ln_p;
    state_.t += tau_;
    u_grid_ = p.u_vals;
    phi_grid_ = p.phi_vals;
    return rep;
}

// First step: fixed point on the unknown midpoint values, all linear algebra
// identical to the main step.
StepReport EsavStepper::startup_step() {
    StepReport rep;

    CVec rhs_u_const = u_rhs_mat_ * state_.U;
    Vec rhs_phi_const = phi_rhs_mat_ * state_.Phi + tau_ * (ops_->M * state_.Psi);

    CVec U1 = state_.U;
    Vec Phi1 = state_.Phi;
    double ln_p1 = state_.ln_p;
    CVec u1_vals = u_grid_;
    Vec phi1_vals = phi_grid_;

    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    StagePass p;
    for (int s = 0; s < max_iter_; ++s) {
        CVec u_mid = 0.5 * (u_grid_ + u1_vals);
        Vec phi_mid = 0.5 * (phi_grid_ + phi1_vals);
        double ln_p_mid = logaddexp(state_.ln_p, ln_p1) - std::log(2.0);

        FgScaled fg = compute_fg_scaled(prob_, *ops_, u_mid, phi_mid, ln_p_mid);
        if (fg.overflow) {
            rep.status = StepStatus::overflow;
            rep.stats.residual = residual;
            return rep;
        }

        p = stage_solve(*ops_, *u_lu_, *phi_lu_, tau_, rhs_u_const, rhs_phi_const, fg, u_mid,
                        phi_mid, u_grid_, phi_grid_, state_.ln_p);
        rep.stats.iterations = s + 1;
        if (!p.finite || !std::isfinite(p.ln_p)) {
            rep.status = StepStatus::divergence;
            rep.stats.residual = residual;
            return rep;
        }

        residual = m_norm(ops_->M, CVec(p.U - U1)) + m_norm(ops_->M, Vec(p.Phi - Phi1));
        U1 = p.U;
        Phi1 = p.Phi;
        ln_p1 = p.ln_p;
        u1_vals = p.u_vals;
        phi1_vals = p.phi_vals;
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
    prev_u_grid_ = u_grid_;
    prev_phi_grid_ = phi_grid_;
    state_.Psi = (2.0 / tau_) * (Phi1 - state_.Phi) - state_.Psi;
    state_.U = U1;
    state_.Phi = Phi1;
    state_.ln_p = ln_p1;
    state_.t += tau_;
    u_grid_ = u1_vals;
    phi_grid_ = phi1_vals;
    return rep;
}

}  // namespace fnkgs
