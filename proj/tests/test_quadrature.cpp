#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fnkgs/quadrature.hpp"
#include "oracles.hpp"

using fnkgs::QuadRule;

namespace {

double quad_sum(const QuadRule& r, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int j = 0; j < r.size(); ++j) acc += r.weights[j] * f(r.nodes[j]);
    return acc;
}

}  // namespace

TEST_CASE("legendre_eval matches the monomial expansion") {
    CHECK(fnkgs::legendre_eval(5, 0.3) == doctest::Approx(0.34538625).epsilon(1e-14));
    CHECK(fnkgs::legendre_eval(12, -0.37) ==
          doctest::Approx(0.0068303922446362603298).epsilon(1e-13));
    for (int n = 0; n <= 15; ++n)
        for (double x : {-0.95, -0.4, 0.0, 0.33, 0.99})
            CHECK(fnkgs::legendre_eval(n, x) ==
                  doctest::Approx(oracle::poly_eval(oracle::legendre_poly(n), x))
                      .epsilon(1e-11));
}

TEST_CASE("jacobi_eval matches spot values") {
    CHECK(fnkgs::jacobi_eval(4, 0.75, -0.75, 0.2) ==
          doctest::Approx(-0.22934765625).epsilon(1e-14));
    CHECK(fnkgs::jacobi_eval(3, -0.6, 0.6, -0.5) == doctest::Approx(0.2465).epsilon(1e-14));
    CHECK(fnkgs::jacobi_eval(2, 1.0, -1.0, 0.4) == doctest::Approx(0.84).epsilon(1e-14));
    // alpha = beta = 0 degenerates to Legendre
    for (int n = 0; n <= 9; ++n)
        CHECK(fnkgs::jacobi_eval(n, 0.0, 0.0, 0.37) ==
              doctest::Approx(fnkgs::legendre_eval(n, 0.37)).epsilon(1e-14));
}

TEST_CASE("Lobatto rule has frozen nodes and weights") {
    QuadRule r8 = fnkgs::gauss_lobatto(8);
    CHECK(r8.size() == 8);
    CHECK(r8.nodes.front() == -1.0);
    CHECK(r8.nodes.back() == 1.0);
    CHECK(r8.nodes[5] == doctest::Approx(0.59170018143314230214).epsilon(1e-15));
    CHECK(r8.weights[5] == doctest::Approx(0.34112269248350436476).epsilon(1e-15));
    CHECK(r8.nodes[6] == doctest::Approx(0.87174014850960661534).epsilon(1e-15));

    QuadRule r20 = fnkgs::gauss_lobatto(20);
    CHECK(r20.nodes[1] == doctest::Approx(-0.98074370489391417193).epsilon(1e-15));
    CHECK(r20.weights[1] == doctest::Approx(0.032237123188488941492).epsilon(1e-14));
}

TEST_CASE("Lobatto rule is symmetric, ascending, and normalised") {
    for (int q : {2, 5, 16, 33, 120, 378}) {
        QuadRule r = fnkgs::gauss_lobatto(q);
        double total = 0.0;
        for (int j = 0; j < q; ++j) {
            total += r.weights[j];
            CHECK(r.nodes[j] == doctest::Approx(-r.nodes[q - 1 - j]).scale(1.0).epsilon(1e-14));
            CHECK(r.weights[j] == doctest::Approx(r.weights[q - 1 - j]).epsilon(1e-12));
            if (j) CHECK(r.nodes[j] > r.nodes[j - 1]);
        }
        CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("Lobatto rule integrates polynomials up to degree 2q-3") {
    for (int q : {4, 9, 14}) {
        QuadRule r = fnkgs::gauss_lobatto(q);
        for (int p = 0; p <= 2 * q - 3; ++p) {
            double exact = p % 2 ? 0.0 : 2.0 / (p + 1.0);
            double got = quad_sum(r, [p](double x) { return std::pow(x, p); });
            CHECK(got == doctest::Approx(exact).scale(1.0).epsilon(1e-13));
        }
    }
    // one degree past the guarantee visibly fails on a small rule, so the
    // exactness degree is not overstated
    QuadRule r4 = fnkgs::gauss_lobatto(4);
    double got = quad_sum(r4, [](double x) { return std::pow(x, 6); });
    CHECK(std::abs(got - 2.0 / 7.0) > 1e-3);
}

TEST_CASE("Gauss-Jacobi rule has frozen nodes and weights") {
    QuadRule r = fnkgs::gauss_jacobi(4, -0.75, -0.75);
    CHECK(r.size() == 4);
    CHECK(r.nodes[0] == doctest::Approx(-0.96013225206711285487).epsilon(1e-15));
    CHECK(r.nodes[1] == doctest::Approx(-0.41116316645539270887).epsilon(1e-15));
    CHECK(r.nodes[2] == doctest::Approx(0.41116316645539270887).epsilon(1e-15));
    CHECK(r.nodes[3] == doctest::Approx(0.96013225206711285487).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(1.7332201534731618647).epsilon(1e-14));
    CHECK(r.weights[1] == doctest::Approx(0.88883740081895794572).epsilon(1e-14));
    double total = 0.0;
    for (double w : r.weights) total += w;
    CHECK(total == doctest::Approx(5.2441151085842396209).epsilon(1e-14));
}

TEST_CASE("Gauss-Jacobi rule integrates weighted monomials exactly") {
    // symmetric singular weight
    QuadRule r = fnkgs::gauss_jacobi(6, -0.6, -0.6);
    CHECK(quad_sum(r, [](double x) { return x * x; }) ==
          doctest::Approx(2.0439411002254893392).epsilon(1e-13));
    // asymmetric singular weight, odd moment
    QuadRule ra = fnkgs::gauss_jacobi(7, -0.9, -0.3);
    CHECK(quad_sum(ra, [](double x) { return x * x * x; }) ==
          doctest::Approx(6.5407399250893974519).epsilon(1e-13));
    // cross-check higher moments against the independent weighted integrator
    for (int p = 0; p <= 9; ++p) {
        double ref = oracle::ts_integrate_jacobi(
            [p](double x) { return std::pow(x, p); }, 0.3, 0.9);
        CHECK(quad_sum(ra, [p](double x) { return std::pow(x, p); }) ==
              doctest::Approx(ref).scale(1.0 + std::abs(ref)).epsilon(1e-12));
    }
}

TEST_CASE("quadrature rejects invalid sizes") {
    CHECK_THROWS_AS((void)fnkgs::gauss_lobatto(1), std::invalid_argument);
    CHECK_THROWS_AS((void)fnkgs::gauss_jacobi(0, -0.5, -0.5), std::invalid_argument);
}

TEST_CASE("cached rules return stable references") {
    const QuadRule& a = fnkgs::cached_lobatto(12);
    const QuadRule& b = fnkgs::cached_lobatto(12);
    CHECK(&a == &b);
    const QuadRule& c = fnkgs::cached_jacobi(9, -0.75, -0.75);
    const QuadRule& d = fnkgs::cached_jacobi(9, -0.75, -0.75);
    CHECK(&c == &d);
    const QuadRule& e = fnkgs::cached_jacobi(9, -0.6, -0.6);
    CHECK(&c != &e);
}
