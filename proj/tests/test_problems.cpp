#include <doctest.h>

#include <cmath>
#include <vector>

#include "fnkgs/problems.hpp"
#include "oracles.hpp"

using namespace fnkgs;

TEST_CASE("solitary wave spot values") {
    CHECK(std::abs(soliton_u(-10.0, 0.0, 0.8, -10.0)) ==
          doctest::Approx(1.767766952966368811).epsilon(1e-14));
    CHECK(std::abs(soliton_u(0.0, 0.0, 0.0, 0.0)) ==
          doctest::Approx(1.0606601717798212866).epsilon(1e-14));
    CHECK(soliton_phi(0.0, 0.0, 0.8, 0.0) ==
          doctest::Approx(2.0833333333333333333).epsilon(1e-14));
    // the hump travels: peak sits at x = nu t + chi0
    double t = 2.5;
    CHECK(std::abs(soliton_u(0.8 * t - 10.0, t, 0.8, -10.0)) ==
          doctest::Approx(1.767766952966368811).epsilon(1e-13));
}

TEST_CASE("phi_t is the time derivative of phi") {
    for (double x : {-11.0, -9.3, -7.0}) {
        auto f = [x](double t) { return soliton_phi(x, t, 0.8, -10.0); };
        CHECK(soliton_phi_t(x, 0.4, 0.8, -10.0) ==
              doctest::Approx(oracle::fd1(f, 0.4, 1e-3)).epsilon(1e-9));
    }
}

TEST_CASE("solitary wave satisfies both equations at alpha = 2") {
    // residuals via high-order finite differences on the closed forms
    double nu = 0.8, chi0 = -10.0, h = 1e-3;
    for (double x : {-10.4, -9.1}) {
        for (double t : {0.3, 1.1}) {
            auto ur = [&](double s, double tt) { return soliton_u(s, tt, nu, chi0).real(); };
            auto ui = [&](double s, double tt) { return soliton_u(s, tt, nu, chi0).imag(); };
            auto ph = [&](double s, double tt) { return soliton_phi(s, tt, nu, chi0); };

            Cplx u = soliton_u(x, t, nu, chi0);
            double phi = ph(x, t);
            Cplx u_t(oracle::fd1([&](double tt) { return ur(x, tt); }, t, h),
                     oracle::fd1([&](double tt) { return ui(x, tt); }, t, h));
            Cplx u_xx(oracle::fd2([&](double s) { return ur(s, t); }, x, h),
                      oracle::fd2([&](double s) { return ui(s, t); }, x, h));

            // i u_t + u_xx / 2 + u phi = 0  (lambda = kappa1 = 1, kappa2 = 0)
            Cplx res1 = Cplx(0, 1) * u_t + 0.5 * u_xx + u * phi;
            CHECK(std::abs(res1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));

            // phi_tt - phi_xx + phi - |u|^2 = 0  (gamma = eta = 1)
            double phi_tt = oracle::fd2([&](double tt) { return ph(x, tt); }, t, h);
            double phi_xx = oracle::fd2([&](double s) { return ph(s, t); }, x, h);
            double res2 = phi_tt - phi_xx + phi - std::norm(u);
            CHECK(res2 == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));
        }
    }
}

TEST_CASE("example 1 wires the single soliton") {
    ProblemSpec p = example1(1.5);
    CHECK(p.alpha == 1.5);
    CHECK(p.kappa2 == 0.0);
    CHECK(p.map.a == -20.0);
    CHECK(p.map.b == 20.0);
    CHECK_FALSE(p.has_exact);
    CHECK(std::abs(p.u0(-10.0)) == doctest::Approx(1.767766952966368811).epsilon(1e-13));
    CHECK(p.phi0(-10.0) == doctest::Approx(soliton_phi(-10.0, 0.0, 0.8, -10.0)).epsilon(1e-14));
    CHECK(p.phi1(-9.0) == doctest::Approx(soliton_phi_t(-9.0, 0.0, 0.8, -10.0)).epsilon(1e-14));

    ProblemSpec pc = example1(2.0);
    CHECK(pc.has_exact);
    CHECK(std::abs(pc.u_exact(-9.2, 1.0) - soliton_u(-9.2, 1.0, 0.8, -10.0)) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(pc.phi_exact(-9.2, 1.0) == doctest::Approx(soliton_phi(-9.2, 1.0, 0.8, -10.0)));
}

TEST_CASE("example 2 data is even and superposes two solitons") {
    ProblemSpec p = example2(1.5, 0.1);
    CHECK(p.kappa2 == 0.1);
    CHECK_FALSE(p.has_exact);
    for (double x : {0.0, 3.7, 9.5, 16.0}) {
        CHECK(std::abs(p.u0(x) - p.u0(-x)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
        CHECK(p.phi0(x) == doctest::Approx(p.phi0(-x)).scale(1.0).epsilon(1e-14));
    }
    Cplx want = soliton_u(3.7 + 10.0, 0.0, 0.8, 0.0) + soliton_u(3.7 - 10.0, 0.0, -0.8, 0.0);
    CHECK(std::abs(p.u0(3.7) - want) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
}

TEST_CASE("tabulated data round-trips through the spline") {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 40; ++i) {
        double x = -1.0 + i * 0.05;
        xs.push_back(x);
        ys.push_back(std::sin(2.0 * x));
    }
    auto f = tabulated_function(xs, ys);
    for (double x : {-0.93, -0.31, 0.0, 0.42, 0.88})
        CHECK(f(x) == doctest::Approx(std::sin(2.0 * x)).scale(1.0).epsilon(1e-4));
    // clamped outside the samples
    CHECK(f(-2.0) == doctest::Approx(ys.front()));
    CHECK(f(5.0) == doctest::Approx(ys.back()));
}
