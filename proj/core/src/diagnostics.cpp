#include "fnkgs/diagnostics.hpp"

#include <cmath>
#include <limits>

namespace fnkgs {

double mass(const OperatorSet& ops, const CVec& U) { return quad_form(ops.M, U); }

double norm_sq(const OperatorSet& ops, const CVec& c) { return quad_form(ops.M, c); }
double norm_sq(const OperatorSet& ops, const Vec& c) { return quad_form(ops.M, c); }
double seminorm_sq(const OperatorSet& ops, const CVec& c) { return quad_form(ops.S, c); }
double seminorm_sq(const OperatorSet& ops, const Vec& c) { return quad_form(ops.S, c); }

namespace {

double quadratic_energy(const ProblemSpec& prob, const OperatorSet& ops, const CVec& U,
                        const Vec& Phi, const Vec& Psi) {
    return norm_sq(ops, Psi) + prob.gamma * seminorm_sq(ops, Phi) +
           prob.eta * prob.eta * norm_sq(ops, Phi) + prob.lambda * seminorm_sq(ops, U);
}

double coupling_integral(const ProblemSpec& prob, const OperatorSet& ops, const CVec& U,
                         const Vec& Phi) {
    Vec abs2 = mat_apply(ops.V, U).cwiseAbs2();
    Vec phi_vals = ops.V * Phi;
    Vec integrand =
        (prob.kappa1 * abs2 + prob.kappa2 * abs2.cwiseProduct(abs2)).cwiseProduct(phi_vals);
    return integrate(ops, integrand);
}

}  // namespace

double energy_cn(const ProblemSpec& prob, const OperatorSet& ops, const CVec& U,
                 const Vec& Phi, const Vec& Psi) {
    return quadratic_energy(prob, ops, U, Phi, Psi) -
           2.0 * coupling_integral(prob, ops, U, Phi);
}

double energy_esav(const ProblemSpec& prob, const OperatorSet& ops, const CVec& U,
                   const Vec& Phi, const Vec& Psi, double ln_p) {
    return quadratic_energy(prob, ops, U, Phi, Psi) - ln_p;
}

ErrorGrid make_error_grid(int N, const DomainMap& map, int mu_factor) {
    ErrorGrid g;
    g.rule = gauss_lobatto(mu_factor * N + 1);
    g.x = map_points(map, g.rule.nodes);
    g.table = basis_table(N - 1, g.rule.nodes);
    g.jacobian = map.jacobian();
    return g;
}

ErrorPair error_norms(const ErrorGrid& grid, const CVec& a_vals, const CVec& b_vals) {
    Vec d2 = (a_vals - b_vals).cwiseAbs2();
    ErrorPair e;
    double s = 0.0;
    for (int j = 0; j < d2.size(); ++j) s += grid.rule.weights[j] * d2(j);
    e.l2 = std::sqrt(grid.jacobian * s);
    e.linf = std::sqrt(d2.maxCoeff());
    return e;
}

ErrorPair error_norms(const ErrorGrid& grid, const Vec& a_vals, const Vec& b_vals) {
    CVec a = a_vals.cast<Cplx>(), b = b_vals.cast<Cplx>();
    return error_norms(grid, a, b);
}

CVec eval_on_grid(const ErrorGrid& grid, const CVec& coeffs) {
    return mat_apply(grid.table, coeffs);
}

Vec eval_on_grid(const ErrorGrid& grid, const Vec& coeffs) { return grid.table * coeffs; }

CVec eval_on_grid(const ErrorGrid& grid, const std::function<Cplx(double)>& f) {
    CVec out(grid.x.size());
    for (size_t j = 0; j < grid.x.size(); ++j) out(j) = f(grid.x[j]);
    return out;
}

Vec eval_on_grid(const ErrorGrid& grid, const std::function<double(double)>& f) {
    Vec out(grid.x.size());
    for (size_t j = 0; j < grid.x.size(); ++j) out(j) = f(grid.x[j]);
    return out;
}

std::vector<double> convergence_rate(const std::vector<double>& errors,
                                     const std::vector<double>& steps) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> rates(errors.size(), nan);
    for (size_t k = 1; k < errors.size() && k < steps.size(); ++k) {
        if (errors[k - 1] <= 0.0 || errors[k] <= 0.0) continue;
        double dh = std::log(steps[k - 1] / steps[k]);
        if (dh == 0.0 || !std::isfinite(dh)) continue;
        rates[k] = std::log(errors[k - 1] / errors[k]) / dh;
    }
    return rates;
}

std::optional<BlowupRecord> detect_blowup(const StepOutcomeInfo& info,
                                          double amplitude_threshold) {
    BlowupRecord rec;
    rec.t = info.t;
    rec.kind = info.kind;
    switch (info.kind) {
        case FailureKind::none:
            break;
        case FailureKind::non_convergence:
            rec.detail = "fixed-point iteration did not reach tolerance";
            return rec;
        case FailureKind::divergence:
            rec.detail = "non-finite values in the iteration";
            return rec;
        case FailureKind::overflow:
            rec.detail = "floating-point range exceeded";
            return rec;
        case FailureKind::amplitude:
            rec.detail = "solution amplitude above threshold";
            return rec;
    }
    if (std::isfinite(info.sup_u) && info.sup_u > amplitude_threshold) {
        rec.kind = FailureKind::amplitude;
        rec.detail = "solution amplitude above threshold";
        return rec;
    }
    if (!std::isfinite(info.sup_u)) {
        rec.kind = FailureKind::divergence;
        rec.detail = "non-finite solution values";
        return rec;
    }
    return std::nullopt;
}

}  // namespace fnkgs
