#include "fnkgs/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace fnkgs {

namespace {

template <typename LU>
void check_pivots(const LU& lu) {
    auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (std::abs(diag(i)) < 1e-300)
            throw std::runtime_error("lu_factor: vanishing pivot, matrix is singular");
    }
}

}  // namespace

LuReal::LuReal(const Mat& A) : lu_(A) { check_pivots(lu_); }

Vec LuReal::solve(const Vec& b) const { return lu_.solve(b); }

LuCplx::LuCplx(const CMat& A) : lu_(A) { check_pivots(lu_); }

CVec LuCplx::solve(const CVec& b) const { return lu_.solve(b); }

double sym_eig_min(const Mat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("sym_eig_min: matrix not square");
    double scale = A.cwiseAbs().maxCoeff();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
        throw std::invalid_argument("sym_eig_min: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(A, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

CVec mat_apply(const Mat& A, const CVec& v) {
    CVec out(A.rows());
    out.real() = A * v.real();
    out.imag() = A * v.imag();
    return out;
}

Vec mat_apply(const Mat& A, const Vec& v) { return A * v; }

double quad_form(const Mat& M, const Vec& v) { return v.dot(M * v); }

double quad_form(const Mat& M, const CVec& v) {
    return v.real().dot(M * v.real()) + v.imag().dot(M * v.imag());
}

namespace {

double sqrt_clamped(double q) {
    if (std::isnan(q)) return q;
    return std::sqrt(std::max(q, 0.0));
}

}  // namespace

double m_norm(const Mat& M, const Vec& v) { return sqrt_clamped(quad_form(M, v)); }

double m_norm(const Mat& M, const CVec& v) { return sqrt_clamped(quad_form(M, v)); }

}  // namespace fnkgs
