#include "fnkgs/assembly.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace fnkgs {

namespace {

void require_modes(int n) {
    if (n < 2) throw std::invalid_argument("assembly: degree bound must be at least 2");
}

Mat stiffness_classical(int row_modes, int col_modes, const DomainMap& map) {
    Mat S = Mat::Zero(row_modes, col_modes);
    int d = std::min(row_modes, col_modes);
    double scale = 2.0 / (map.b - map.a);
    for (int k = 0; k < d; ++k) S(k, k) = scale * 2.0 * (2 * k + 3);
    return S;
}

// Contraction A(l,k) = sum_j w_j R(j,l) L(j,k) against the Gauss-Jacobi rule.
Mat cross_contraction(const Mat& R, const Vec& w, const Mat& L) {
    return R.transpose() * w.asDiagonal() * L;
}

}  // namespace

Mat build_mass(int N, const DomainMap& map) {
    require_modes(N - 1);
    int K = N - 1;
    double jac = map.jacobian();
    Mat M = Mat::Zero(K, K);
    for (int k = 0; k < K; ++k) {
        M(k, k) = jac * (2.0 / (2 * k + 1) + 2.0 / (2 * k + 5));
        if (k + 2 < K) {
            M(k + 2, k) = -jac * 2.0 / (2 * k + 5);
            M(k, k + 2) = M(k + 2, k);
        }
    }
    return M;
}

Mat build_stiffness(int N, const DomainMap& map, double alpha) {
    require_modes(N - 1);
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("build_stiffness: alpha must lie in (1,2]");
    int K = N - 1;
    if (alpha == 2.0) return stiffness_classical(K, K, map);

    double mu = alpha / 2.0;
    int q = (2 * K + 2) / 2 + 2;
    const QuadRule& rule = cached_jacobi(q, -mu, -mu);
    Mat GL = frac_deriv_basis_regular(K, mu, Side::left, rule.nodes);
    Mat GR = frac_deriv_basis_regular(K, mu, Side::right, rule.nodes);
    Vec w = Eigen::Map<const Vec>(rule.weights.data(), rule.weights.size());

    Mat A = cross_contraction(GR, w, GL);
    double c = 1.0 / (2.0 * std::cos(alpha * M_PI / 2.0));
    double scale = std::pow(2.0 / (map.b - map.a), alpha - 1.0);
    return (c * scale) * (A + A.transpose());
}

Mat build_stiffness_rect(int row_modes, int col_modes, const DomainMap& map, double alpha) {
    if (row_modes < 1 || col_modes < 1)
        throw std::invalid_argument("build_stiffness_rect: need at least one mode");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("build_stiffness_rect: alpha must lie in (1,2]");
    if (row_modes == col_modes) return build_stiffness(row_modes + 1, map, alpha);
    if (alpha == 2.0) return stiffness_classical(row_modes, col_modes, map);

    double mu = alpha / 2.0;
    int q = (row_modes + col_modes + 2) / 2 + 2;
    const QuadRule& rule = cached_jacobi(q, -mu, -mu);
    Mat GLr = frac_deriv_basis_regular(row_modes, mu, Side::left, rule.nodes);
    Mat GRr = frac_deriv_basis_regular(row_modes, mu, Side::right, rule.nodes);
    Mat GLc = frac_deriv_basis_regular(col_modes, mu, Side::left, rule.nodes);
    Mat GRc = frac_deriv_basis_regular(col_modes, mu, Side::right, rule.nodes);
    Vec w = Eigen::Map<const Vec>(rule.weights.data(), rule.weights.size());

    Mat A1 = cross_contraction(GRr, w, GLc);
    Mat A2 = cross_contraction(GLr, w, GRc);
    double c = 1.0 / (2.0 * std::cos(alpha * M_PI / 2.0));
    double scale = std::pow(2.0 / (map.b - map.a), alpha - 1.0);
    return (c * scale) * (A1 + A2);
}

OperatorSet::OperatorSet(int N_, const DomainMap& map_, double alpha_)
    : N(N_), K(N_ - 1), map(map_), alpha(alpha_) {
    require_modes(K);
    M = build_mass(N, map);
    S = build_stiffness(N, map, alpha);
    lgl = gauss_lobatto((5 * N + 1) / 2 + 3);
    x_nodes = map_points(map, lgl.nodes);
    w = Eigen::Map<const Vec>(lgl.weights.data(), lgl.weights.size());
    V = basis_table(K, lgl.nodes);
    G = map.jacobian() * (V.transpose() * w.asDiagonal());
}

CVec synthesize(const Mat& table, const CVec& coeffs) { return mat_apply(table, coeffs); }

Vec synthesize(const Mat& table, const Vec& coeffs) { return table * coeffs; }

CVec galerkin_rhs(const OperatorSet& ops, const CVec& point_values) {
    return mat_apply(ops.G, point_values);
}

Vec galerkin_rhs(const OperatorSet& ops, const Vec& point_values) {
    return ops.G * point_values;
}

double integrate(const OperatorSet& ops, const Vec& point_values) {
    return ops.map.jacobian() * ops.w.dot(point_values);
}

NonlinearVectors nonlinear_vectors(const OperatorSet& ops, const CVec& Un_vals,
                                   const CVec& Us_vals, const Vec& Phin_vals,
                                   const Vec& Phis_vals) {
    Vec abs2_n = Un_vals.cwiseAbs2();
    Vec abs2_s = Us_vals.cwiseAbs2();
    Vec abs2_sum = abs2_n + abs2_s;
    Vec phi_sum = Phin_vals + Phis_vals;
    CVec u_sum = Un_vals + Us_vals;

    CVec uphi = u_sum.array() * phi_sum.array().cast<Cplx>();
    NonlinearVectors out;
    out.N1 = galerkin_rhs(ops, uphi);
    out.N2 = galerkin_rhs(ops, CVec(uphi.array() * abs2_sum.array().cast<Cplx>()));
    out.N3 = galerkin_rhs(ops, abs2_sum);
    out.N4 = galerkin_rhs(ops, Vec(abs2_n.cwiseProduct(abs2_n) + abs2_s.cwiseProduct(abs2_s)));
    return out;
}

namespace {

// Shared pipeline for both scalar types: sample f on the pipeline nodes,
// contract, solve, optionally push through the elliptic cross system.
struct InitSolver {
    std::vector<double> x;  // mapped sample nodes
    Mat R;                  // rhs contraction (modes x nodes)
    std::unique_ptr<LuReal> first;
    Mat cross;              // elliptic stage: S_rect from the enriched space
    std::unique_ptr<LuReal> second;

    Vec run(const Vec& fvals) const {
        Vec c = first->solve(R * fvals);
        if (second) c = second->solve(cross * c);
        return c;
    }
};

InitSolver make_init_solver(const OperatorSet& ops, InitMode mode) {
    InitSolver s;
    if (mode == InitMode::l2) {
        s.x = ops.x_nodes;
        s.R = ops.G;
        s.first = std::make_unique<LuReal>(ops.M);
        return s;
    }
    // Elliptic projection through an enriched degree-2N space: take its L2
    // projection there, then match the fractional bilinear form on the
    // solution space.
    int N2 = 2 * ops.N;
    int K2 = N2 - 1;
    const QuadRule& rule = cached_lobatto(5 * ops.N + 3);
    s.x = map_points(ops.map, rule.nodes);
    Vec w2 = Eigen::Map<const Vec>(rule.weights.data(), rule.weights.size());
    Mat V2 = basis_table(K2, rule.nodes);
    s.R = ops.map.jacobian() * (V2.transpose() * w2.asDiagonal());
    s.first = std::make_unique<LuReal>(build_mass(N2, ops.map));
    s.cross = build_stiffness_rect(ops.K, K2, ops.map, ops.alpha);
    s.second = std::make_unique<LuReal>(ops.S);
    return s;
}

}  // namespace

Vec project_initial(const OperatorSet& ops, const std::function<double(double)>& f,
                    InitMode mode) {
    InitSolver s = make_init_solver(ops, mode);
    Vec fv(s.x.size());
    for (size_t j = 0; j < s.x.size(); ++j) fv(j) = f(s.x[j]);
    return s.run(fv);
}

CVec project_initial(const OperatorSet& ops, const std::function<Cplx(double)>& f,
                     InitMode mode) {
    InitSolver s = make_init_solver(ops, mode);
    Vec re(s.x.size()), im(s.x.size());
    for (size_t j = 0; j < s.x.size(); ++j) {
        Cplx v = f(s.x[j]);
        re(j) = v.real();
        im(j) = v.imag();
    }
    CVec out(ops.K);
    out.real() = s.run(re);
    out.imag() = s.run(im);
    return out;
}

}  // namespace fnkgs
