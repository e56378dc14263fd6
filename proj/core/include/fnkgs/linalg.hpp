#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fnkgs {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

// Factor-once / solve-many dense LU with partial pivoting.  Throws
// std::runtime_error if a pivot falls below 1e-300.
class LuReal {
  public:
    explicit LuReal(const Mat& A);
    Vec solve(const Vec& b) const;

  private:
    Eigen::PartialPivLU<Mat> lu_;
};

class LuCplx {
  public:
    explicit LuCplx(const CMat& A);
    CVec solve(const CVec& b) const;

  private:
    Eigen::PartialPivLU<CMat> lu_;
};

// Smallest eigenvalue of a real symmetric matrix.  Throws
// std::invalid_argument on non-symmetric input.
double sym_eig_min(const Mat& A);

// Real matrix applied to a complex vector.
CVec mat_apply(const Mat& A, const CVec& v);
Vec mat_apply(const Mat& A, const Vec& v);

// v^T M v, resp. Re(v^H M v), for real symmetric M.
double quad_form(const Mat& M, const Vec& v);
double quad_form(const Mat& M, const CVec& v);

// sqrt(max(quad_form, 0)); NaN propagates so divergence stays visible.
double m_norm(const Mat& M, const Vec& v);
double m_norm(const Mat& M, const CVec& v);

// Linear extrapolation 2*current - previous, the predictor for implicit steps.
template <typename V>
V extrapolate_guess(const V& current, const V& previous) {
    return 2.0 * current - previous;
}

}  // namespace fnkgs
