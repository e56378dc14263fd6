#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fnkgs/quadrature.hpp"

namespace fnkgs {

// Affine map between the reference interval [-1,1] and [a,b].
struct DomainMap {
    double a = -1.0;
    double b = 1.0;
    double from_ref(double xhat) const { return ((b - a) * xhat + (a + b)) / 2.0; }
    double to_ref(double x) const { return (2.0 * x - (a + b)) / (b - a); }
    double jacobian() const { return (b - a) / 2.0; }
};

std::vector<double> map_points(const DomainMap& map, const std::vector<double>& ref_points);

enum class Side { left, right };

// Tables of polynomial values at given reference points; column j holds degree j,
// rows follow the point list.
Eigen::MatrixXd legendre_table(int n_max, const std::vector<double>& x);
Eigen::MatrixXd jacobi_table(int n_max, double a, double b, const std::vector<double>& x);

// Boundary-vanishing combinations sigma_k = L_k - L_{k+2}, k = 0 .. num_modes-1.
// A space with polynomial degree bound N has num_modes = N-1.
Eigen::MatrixXd basis_table(int num_modes, const std::vector<double>& x);
// sigma_k' = -(2k+3) L_{k+1}
Eigen::MatrixXd basis_deriv_table(int num_modes, const std::vector<double>& x);

// Regular factor g_k of the Riemann-Liouville derivative of order mu in (1/2, 1]:
//   left:   D^mu sigma_k (x) = (1+x)^{-mu} g_k(x)
//   right:  D^mu sigma_k (x) = (1-x)^{-mu} g_k(x)
// with g_k = Gamma(k+1)/Gamma(k+1-mu) P_k^{(mu,-mu)} - Gamma(k+3)/Gamma(k+3-mu) P_{k+2}^{(mu,-mu)}
// (Jacobi parameters swapped to (-mu, mu) for the right side).  The singular
// weight is not multiplied in; callers absorb it into Gauss-Jacobi quadrature.
Eigen::MatrixXd frac_deriv_basis_regular(int num_modes, double mu, Side side,
                                         const std::vector<double>& x);

}  // namespace fnkgs
