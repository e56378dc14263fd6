#pragma once

#include <vector>

namespace fnkgs {

// Quadrature rule on the reference interval [-1,1], nodes ascending.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

// Legendre polynomial L_n(x) by the three-term recurrence.
double legendre_eval(int n, double x);

// Jacobi polynomial P_n^{(a,b)}(x), a,b > -1.
double jacobi_eval(int n, double a, double b, double x);

// Legendre-Gauss-Lobatto rule with q >= 2 nodes (endpoints included).
// Exact for polynomials of degree <= 2q-3.
QuadRule gauss_lobatto(int q);

// Gauss-Jacobi rule with q >= 1 nodes for the weight (1-x)^a (1+x)^b.
// Exact for w(x) * polynomial of degree <= 2q-1.
QuadRule gauss_jacobi(int q, double a, double b);

// Cached variants; rules are computed once per key and reused.
const QuadRule& cached_lobatto(int q);
const QuadRule& cached_jacobi(int q, double a, double b);

}  // namespace fnkgs
