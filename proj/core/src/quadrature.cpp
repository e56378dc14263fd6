#include "fnkgs/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fnkgs {

namespace {

constexpr double kNewtonTol = 1e-15;
constexpr int kNewtonMaxIter = 100;

// L_n and L_n' in one pass; the derivative uses
// L_n'(x) = n (L_{n-1}(x) - x L_n(x)) / (1 - x^2), |x| < 1.
void legendre_pair(int n, double x, double& value, double& deriv) {
    if (n == 0) {
        value = 1.0;
        deriv = 0.0;
        return;
    }
    double lm = 1.0, l = x;
    for (int k = 1; k < n; ++k) {
        double lp = ((2 * k + 1) * x * l - k * lm) / (k + 1);
        lm = l;
        l = lp;
    }
    value = l;
    deriv = n * (lm - x * l) / (1.0 - x * x);
}

double jacobi_deriv(int n, double a, double b, double x) {
    if (n == 0) return 0.0;
    return 0.5 * (n + a + b + 1) * jacobi_eval(n - 1, a + 1, b + 1, x);
}

void check_ascending(const std::vector<double>& nodes) {
    for (size_t j = 1; j < nodes.size(); ++j) {
        if (!(nodes[j] > nodes[j - 1]))
            throw std::runtime_error("quadrature nodes out of order; root search failed");
    }
}

}  // namespace

double legendre_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("legendre_eval: negative degree");
    if (n == 0) return 1.0;
    double lm = 1.0, l = x;
    for (int k = 1; k < n; ++k) {
        double lp = ((2 * k + 1) * x * l - k * lm) / (k + 1);
        lm = l;
        l = lp;
    }
    return l;
}

double jacobi_eval(int n, double a, double b, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
    if (n == 0) return 1.0;
    double pm = 1.0;
    double p = 0.5 * (a - b) + 0.5 * (a + b + 2) * x;
    for (int k = 1; k < n; ++k) {
        double c = 2 * k + a + b;
        double denom = 2 * (k + 1) * (k + a + b + 1) * c;
        double c1 = (c + 1) * (a * a - b * b);
        double c2 = (c + 1) * c * (c + 2);
        double c3 = 2 * (k + a) * (k + b) * (c + 2);
        double pp = ((c1 + c2 * x) * p - c3 * pm) / denom;
        pm = p;
        p = pp;
    }
    return p;
}

QuadRule gauss_lobatto(int q) {
    if (q < 2) throw std::invalid_argument("gauss_lobatto: need q >= 2");
    QuadRule rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);
    rule.nodes.front() = -1.0;
    rule.nodes.back() = 1.0;

    int n = q - 1;  // interior nodes are the roots of L_n'
    for (int j = 1; j < q - 1; ++j) {
        double x = -std::cos(M_PI * j / n);
        for (int it = 0; it < kNewtonMaxIter; ++it) {
            double l, dl;
            legendre_pair(n, x, l, dl);
            double d2l = (2.0 * x * dl - n * (n + 1) * l) / (1.0 - x * x);
            double dx = dl / d2l;
            x -= dx;
            if (std::abs(dx) < kNewtonTol) break;
        }
        rule.nodes[j] = x;
    }
    check_ascending(rule.nodes);

    for (int j = 0; j < q; ++j) {
        double l = legendre_eval(n, rule.nodes[j]);
        rule.weights[j] = 2.0 / (q * n * l * l);
    }
    return rule;
}

QuadRule gauss_jacobi(int q, double a, double b) {
    if (q < 1) throw std::invalid_argument("gauss_jacobi: need q >= 1");
    if (a <= -1.0 || b <= -1.0)
        throw std::invalid_argument("gauss_jacobi: parameters must exceed -1");
    QuadRule rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);

    for (int j = 0; j < q; ++j) {
        double x = -std::cos((2.0 * j + 1.0) * M_PI / (2.0 * q));
        for (int it = 0; it < kNewtonMaxIter; ++it) {
            double p = jacobi_eval(q, a, b, x);
            double dp = jacobi_deriv(q, a, b, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < kNewtonTol) break;
        }
        rule.nodes[j] = x;
    }
    check_ascending(rule.nodes);

    double ln_c = (a + b + 1) * std::log(2.0) + std::lgamma(q + a + 1) +
                  std::lgamma(q + b + 1) - std::lgamma(q + 1.0) -
                  std::lgamma(q + a + b + 1);
    double c = std::exp(ln_c);
    for (int j = 0; j < q; ++j) {
        double x = rule.nodes[j];
        double dp = jacobi_deriv(q, a, b, x);
        rule.weights[j] = c / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const QuadRule& cached_lobatto(int q) {
    static std::mutex mu;
    static std::map<int, QuadRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, gauss_lobatto(q)).first;
    return it->second;
}

const QuadRule& cached_jacobi(int q, double a, double b) {
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, QuadRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(q, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gauss_jacobi(q, a, b)).first;
    return it->second;
}

}  // namespace fnkgs
