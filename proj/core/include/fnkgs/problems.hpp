#pragma once

#include <functional>
#include <string>

#include "fnkgs/basis.hpp"
#include "fnkgs/linalg.hpp"

namespace fnkgs {

// Coupled fractional Klein-Gordon-Schrodinger model
//   i u_t - (lambda/2)(-Lap)^{alpha/2} u + kappa1 u phi + 2 kappa2 |u|^2 u phi = 0
//   phi_tt + gamma (-Lap)^{alpha/2} phi + eta^2 phi - kappa1 |u|^2 - kappa2 |u|^4 = 0
// on (a,b) with homogeneous Dirichlet data.
struct ProblemSpec {
    std::string name = "custom";
    double alpha = 1.5;
    double lambda = 1.0;
    double kappa1 = 1.0;
    double kappa2 = 0.0;
    double gamma = 1.0;
    double eta = 1.0;
    DomainMap map{-20.0, 20.0};
    double T = 1.0;

    std::function<Cplx(double)> u0;
    std::function<double(double)> phi0;
    std::function<double(double)> phi1;

    // Exact solitary wave, available only for the single-soliton setup at alpha = 2.
    bool has_exact = false;
    std::function<Cplx(double, double)> u_exact;    // (x,t)
    std::function<double(double, double)> phi_exact;
};

// Solitary wave solution of the classical (alpha = 2) system with
// lambda = kappa1 = gamma = eta = 1, kappa2 = 0; |nu| < 1.
Cplx soliton_u(double x, double t, double nu, double chi0);
double soliton_phi(double x, double t, double nu, double chi0);
double soliton_phi_t(double x, double t, double nu, double chi0);

// Natural cubic spline through ascending samples (x_i, y_i); evaluates by
// clamped extrapolation outside the sample range.  Lets file-driven runs pass
// tabulated initial data wherever a callable is expected.
std::function<double(double)> tabulated_function(std::vector<double> x,
                                                 std::vector<double> y);

// Single soliton on (-20,20), nu = 0.8, chi0 = -10.
ProblemSpec example1(double alpha, double nu = 0.8, double chi0 = -10.0);

// Counter-propagating soliton pair on (-20,20): centers -10 and +10,
// velocities +0.8 and -0.8; quartic coupling strength kappa2.
ProblemSpec example2(double alpha, double kappa2);

}  // namespace fnkgs
