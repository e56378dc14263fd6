#include "fnkgs/problems.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace fnkgs {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

Cplx soliton_u(double x, double t, double nu, double chi0) {
    double g = 1.0 - nu * nu;
    double theta = (x - nu * t - chi0) / (2.0 * std::sqrt(g));
    double amp = 3.0 * std::sqrt(2.0) / (4.0 * std::sqrt(g));
    double s = sech(theta);
    double phase = nu * x + (1.0 - nu * nu + std::pow(nu, 4)) / (2.0 * g) * t;
    return amp * s * s * std::polar(1.0, phase);
}

double soliton_phi(double x, double t, double nu, double chi0) {
    double g = 1.0 - nu * nu;
    double theta = (x - nu * t - chi0) / (2.0 * std::sqrt(g));
    double s = sech(theta);
    return 3.0 / (4.0 * g) * s * s;
}

double soliton_phi_t(double x, double t, double nu, double chi0) {
    double g = 1.0 - nu * nu;
    double theta = (x - nu * t - chi0) / (2.0 * std::sqrt(g));
    double s = sech(theta);
    return 3.0 * nu / (4.0 * std::pow(g, 1.5)) * s * s * std::tanh(theta);
}

std::function<double(double)> tabulated_function(std::vector<double> x,
                                                 std::vector<double> y) {
    size_t n = x.size();
    if (n < 2 || y.size() != n)
        throw std::invalid_argument("tabulated_function: need matching samples, at least two");
    for (size_t i = 1; i < n; ++i)
        if (!(x[i] > x[i - 1]))
            throw std::invalid_argument("tabulated_function: abscissae must ascend");

    // Natural cubic spline second derivatives by the standard tridiagonal sweep.
    std::vector<double> m(n, 0.0), diag(n, 0.0), rhs(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
        double hl = x[i] - x[i - 1], hr = x[i + 1] - x[i];
        diag[i] = 2.0 * (hl + hr);
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / hr - (y[i] - y[i - 1]) / hl);
    }
    std::vector<double> c(n, 0.0);
    for (size_t i = 2; i + 1 < n; ++i) {
        double hl = x[i] - x[i - 1];
        double f = hl / diag[i - 1];
        diag[i] -= f * hl;
        rhs[i] -= f * rhs[i - 1];
    }
    for (size_t i = n - 2; i >= 1; --i) {
        double hr = x[i + 1] - x[i];
        m[i] = (rhs[i] - hr * m[i + 1]) / diag[i];
        if (i == 1) break;
    }

    auto xs = std::make_shared<std::vector<double>>(std::move(x));
    auto ys = std::make_shared<std::vector<double>>(std::move(y));
    auto ms = std::make_shared<std::vector<double>>(std::move(m));
    return [xs, ys, ms](double t) {
        const auto& x = *xs;
        const auto& y = *ys;
        const auto& m = *ms;
        size_t n = x.size();
        if (t <= x.front()) return y.front();
        if (t >= x.back()) return y.back();
        size_t i = std::upper_bound(x.begin(), x.end(), t) - x.begin() - 1;
        double h = x[i + 1] - x[i];
        double a = (x[i + 1] - t) / h, b = (t - x[i]) / h;
        return a * y[i] + b * y[i + 1] +
               ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
    };
}

ProblemSpec example1(double alpha, double nu, double chi0) {
    ProblemSpec p;
    p.name = "example1";
    p.alpha = alpha;
    p.lambda = 1.0;
    p.kappa1 = 1.0;
    p.kappa2 = 0.0;
    p.gamma = 1.0;
    p.eta = 1.0;
    p.map = DomainMap{-20.0, 20.0};
    p.u0 = [nu, chi0](double x) { return soliton_u(x, 0.0, nu, chi0); };
    p.phi0 = [nu, chi0](double x) { return soliton_phi(x, 0.0, nu, chi0); };
    p.phi1 = [nu, chi0](double x) { return soliton_phi_t(x, 0.0, nu, chi0); };
    p.has_exact = (alpha == 2.0);
    p.u_exact = [nu, chi0](double x, double t) { return soliton_u(x, t, nu, chi0); };
    p.phi_exact = [nu, chi0](double x, double t) { return soliton_phi(x, t, nu, chi0); };
    return p;
}

ProblemSpec example2(double alpha, double kappa2) {
    ProblemSpec p;
    p.name = "example2";
    p.alpha = alpha;
    p.lambda = 1.0;
    p.kappa1 = 1.0;
    p.kappa2 = kappa2;
    p.gamma = 1.0;
    p.eta = 1.0;
    p.map = DomainMap{-20.0, 20.0};
    const double p1 = -10.0, p2 = 10.0, nu1 = 0.8, nu2 = -0.8;
    p.u0 = [=](double x) {
        return soliton_u(x - p1, 0.0, nu1, 0.0) + soliton_u(x - p2, 0.0, nu2, 0.0);
    };
    p.phi0 = [=](double x) {
        return soliton_phi(x - p1, 0.0, nu1, 0.0) + soliton_phi(x - p2, 0.0, nu2, 0.0);
    };
    p.phi1 = [=](double x) {
        return soliton_phi_t(x - p1, 0.0, nu1, 0.0) + soliton_phi_t(x - p2, 0.0, nu2, 0.0);
    };
    p.has_exact = false;
    return p;
}

}  // namespace fnkgs
