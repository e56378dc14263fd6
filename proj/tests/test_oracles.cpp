#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace oracle;

TEST_CASE("tanh-sinh integrates smooth and log-singular functions") {
    CHECK(ts_integrate([](double x) { return x * x; }, -1.0, 1.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(ts_integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(ts_integrate([](double x) { return -std::log(x); }, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ts_integrate([](double x) { return std::exp(x); }, -2.0, 3.0) ==
          doctest::Approx(std::exp(3.0) - std::exp(-2.0)).epsilon(1e-13));
}

TEST_CASE("weighted tanh-sinh reproduces singular Jacobi moments") {
    auto one = [](double) { return 1.0; };
    // int (1-x)^{-3/4} (1+x)^{-3/4} dx = 2^{-1/2} B(1/4, 1/4)
    CHECK(ts_integrate_jacobi(one, 0.75, 0.75) ==
          doctest::Approx(5.2441151085842396209).epsilon(1e-12));
    auto x2 = [](double x) { return x * x; };
    CHECK(ts_integrate_jacobi(x2, 0.6, 0.6) ==
          doctest::Approx(2.0439411002254893392).epsilon(1e-12));
    // asymmetric weight (1-x)^{-0.9} (1+x)^{-0.3} against x^3; reference from
    // the beta-function decomposition under x = 1 - 2v
    auto x3 = [](double x) { return x * x * x; };
    CHECK(ts_integrate_jacobi(x3, 0.3, 0.9) ==
          doctest::Approx(6.5407399250893974519).epsilon(1e-12));
}

TEST_CASE("monomial Legendre polynomials match spot values") {
    CHECK(poly_eval(legendre_poly(5), 0.3) == doctest::Approx(0.34538625).epsilon(1e-14));
    CHECK(poly_eval(legendre_poly(12), -0.37) ==
          doctest::Approx(0.0068303922446362603298).epsilon(1e-12));
    for (int n = 0; n <= 12; ++n) {
        CHECK(poly_eval(legendre_poly(n), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(poly_eval(legendre_poly(n), -1.0) ==
              doctest::Approx(n % 2 ? -1.0 : 1.0).epsilon(1e-12));
    }
}

TEST_CASE("shifted expansions agree with the monomial form") {
    for (int k = 0; k <= 8; ++k) {
        Poly c = basis_poly(k);
        BasisShifted s = basis_shifted(k);
        for (double x : {-0.9, -0.35, 0.0, 0.15, 0.6, 0.95}) {
            double direct = poly_eval(c, x);
            CHECK(poly_eval(s.left, 1.0 + x) == doctest::Approx(direct).epsilon(1e-9));
            CHECK(poly_eval(s.right, 1.0 - x) == doctest::Approx(direct).epsilon(1e-9));
        }
        // the basis vanishes at both ends, so the shifted constant terms do too
        CHECK(s.left[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(s.right[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("term-wise fractional derivatives match frozen values") {
    CHECK(left_frac_deriv(0, 0.75, 0.0) ==
          doctest::Approx(0.661957590792502354).epsilon(1e-13));
    CHECK(left_frac_deriv(3, 0.75, 0.3) ==
          doctest::Approx(-1.2969113933648118419).epsilon(1e-13));
    CHECK(left_frac_deriv(5, 0.6, -0.4) ==
          doctest::Approx(-1.9134109146316551291).epsilon(1e-13));
    CHECK(left_frac_deriv(2, 0.9, 0.7) ==
          doctest::Approx(1.5699903027285354).epsilon(1e-12));
    CHECK(right_frac_deriv(2, 0.9, 0.7) ==
          doctest::Approx(-0.70781023225303921601).epsilon(1e-12));
}

TEST_CASE("defining-integral derivatives agree with the term-wise route") {
    for (int k : {1, 4}) {
        Poly c = basis_poly(k);
        Poly cp(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) cp[i - 1] = c[i] * static_cast<double>(i);
        auto f = [&](double x) { return poly_eval(c, x); };
        auto fp = [&](double x) { return poly_eval(cp, x); };
        for (double mu : {0.6, 0.9}) {
            for (double x : {-0.5, 0.2, 0.8}) {
                CHECK(rl_left_direct(f, fp, mu, x) ==
                      doctest::Approx(left_frac_deriv(k, mu, x)).epsilon(1e-9));
                CHECK(rl_right_direct(f, fp, mu, x) ==
                      doctest::Approx(right_frac_deriv(k, mu, x)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("stiffness entries from definitions match frozen values") {
    CHECK(stiffness_entry(0, 0, -1.0, 1.0, 1.5) ==
          doctest::Approx(3.8687285728989002534).epsilon(1e-10));
    CHECK(stiffness_entry(2, 0, -1.0, 1.0, 1.5) ==
          doctest::Approx(-0.82063939425128187192).epsilon(1e-10));
    CHECK(stiffness_entry(5, 3, -1.0, 1.0, 1.5) ==
          doctest::Approx(-1.3873339533936185265).epsilon(1e-10));
    CHECK(stiffness_entry(6, 6, -1.0, 1.0, 1.5) ==
          doctest::Approx(8.3672264214186394449).epsilon(1e-10));
    CHECK(stiffness_entry(0, 0, -1.0, 1.0, 1.2) ==
          doctest::Approx(3.183899606329042477).epsilon(1e-10));
    CHECK(stiffness_entry(4, 4, -1.0, 1.0, 1.8) ==
          doctest::Approx(13.826124456024761249).epsilon(1e-10));
    CHECK(stiffness_entry(0, 0, -20.0, 20.0, 1.5) ==
          doctest::Approx(0.8650740075497691594).epsilon(1e-10));
    // symmetry of the definition itself
    CHECK(stiffness_entry(3, 5, -1.0, 1.0, 1.5) ==
          doctest::Approx(stiffness_entry(5, 3, -1.0, 1.0, 1.5)).epsilon(1e-12));
}

TEST_CASE("finite difference helpers hit their design order") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(fd1(f, 0.3, 1e-2) == doctest::Approx(std::cos(0.3)).epsilon(1e-8));
    CHECK(fd2(f, 0.3, 1e-2) == doctest::Approx(-std::sin(0.3)).epsilon(1e-7));
}
