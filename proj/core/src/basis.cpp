#include "fnkgs/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace fnkgs {

std::vector<double> map_points(const DomainMap& map, const std::vector<double>& ref_points) {
    std::vector<double> out(ref_points.size());
    for (size_t j = 0; j < ref_points.size(); ++j) out[j] = map.from_ref(ref_points[j]);
    return out;
}

Eigen::MatrixXd legendre_table(int n_max, const std::vector<double>& x) {
    const int rows = static_cast<int>(x.size());
    Eigen::MatrixXd T(rows, n_max + 1);
    for (int i = 0; i < rows; ++i) {
        T(i, 0) = 1.0;
        if (n_max >= 1) T(i, 1) = x[i];
        for (int k = 1; k < n_max; ++k)
            T(i, k + 1) = ((2 * k + 1) * x[i] * T(i, k) - k * T(i, k - 1)) / (k + 1);
    }
    return T;
}

Eigen::MatrixXd jacobi_table(int n_max, double a, double b, const std::vector<double>& x) {
    const int rows = static_cast<int>(x.size());
    Eigen::MatrixXd T(rows, n_max + 1);
    for (int i = 0; i < rows; ++i) {
        T(i, 0) = 1.0;
        if (n_max >= 1) T(i, 1) = 0.5 * (a - b) + 0.5 * (a + b + 2) * x[i];
        for (int k = 1; k < n_max; ++k) {
            double c = 2 * k + a + b;
            double denom = 2 * (k + 1) * (k + a + b + 1) * c;
            double c1 = (c + 1) * (a * a - b * b);
            double c2 = (c + 1) * c * (c + 2);
            double c3 = 2 * (k + a) * (k + b) * (c + 2);
            T(i, k + 1) = ((c1 + c2 * x[i]) * T(i, k) - c3 * T(i, k - 1)) / denom;
        }
    }
    return T;
}

Eigen::MatrixXd basis_table(int num_modes, const std::vector<double>& x) {
    if (num_modes < 1) throw std::invalid_argument("basis_table: need at least one mode");
    Eigen::MatrixXd L = legendre_table(num_modes + 1, x);
    Eigen::MatrixXd T(L.rows(), num_modes);
    for (int k = 0; k < num_modes; ++k) T.col(k) = L.col(k) - L.col(k + 2);
    return T;
}

Eigen::MatrixXd basis_deriv_table(int num_modes, const std::vector<double>& x) {
    if (num_modes < 1) throw std::invalid_argument("basis_deriv_table: need at least one mode");
    Eigen::MatrixXd L = legendre_table(num_modes, x);
    Eigen::MatrixXd T(L.rows(), num_modes);
    for (int k = 0; k < num_modes; ++k) T.col(k) = -(2 * k + 3.0) * L.col(k + 1);
    return T;
}

Eigen::MatrixXd frac_deriv_basis_regular(int num_modes, double mu, Side side,
                                         const std::vector<double>& x) {
    if (num_modes < 1)
        throw std::invalid_argument("frac_deriv_basis_regular: need at least one mode");
    if (!(mu > 0.0 && mu <= 1.0))
        throw std::invalid_argument("frac_deriv_basis_regular: order must lie in (0,1]");

    double pa = (side == Side::left) ? mu : -mu;
    Eigen::MatrixXd P = jacobi_table(num_modes + 1, pa, -pa, x);
    Eigen::MatrixXd T(P.rows(), num_modes);
    for (int k = 0; k < num_modes; ++k) {
        // Gamma(k+1)/Gamma(k+1-mu); vanishes in the k=0, mu=1 limit.
        double r1 = std::exp(std::lgamma(k + 1.0) - std::lgamma(k + 1.0 - mu));
        double r2 = std::exp(std::lgamma(k + 3.0) - std::lgamma(k + 3.0 - mu));
        T.col(k) = r1 * P.col(k) - r2 * P.col(k + 2);
    }
    return T;
}

}  // namespace fnkgs
