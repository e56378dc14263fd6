#pragma once

#include <functional>

#include "fnkgs/basis.hpp"
#include "fnkgs/linalg.hpp"
#include "fnkgs/quadrature.hpp"

namespace fnkgs {

// Mass matrix M_{l,k} = (sigma_k, sigma_l) on [a,b]; pentadiagonal pattern
// |k-l| in {0,2}, closed form from Legendre orthogonality.
Mat build_mass(int N, const DomainMap& map);

// Riesz fractional stiffness S_{l,k} = B(sigma_k, sigma_l) for alpha in (1,2]:
//   B(u,w) = [ (D_left^{a/2} u, D_right^{a/2} w) + (D_right^{a/2} u, D_left^{a/2} w) ] / (2 cos(alpha pi/2))
// assembled by Gauss-Jacobi quadrature with weight (1-x)^{-a/2}(1+x)^{-a/2}
// (exact, polynomial factor degree <= 2N); alpha = 2 reduces to the classical
// diagonal (2/(b-a)) * 2(2k+3).
Mat build_stiffness(int N, const DomainMap& map, double alpha);

// Rectangular cross form B(sigma_k, sigma_l) with independent row (test) and
// column (trial) mode counts; used by the fractional-elliptic initial projection.
Mat build_stiffness_rect(int row_modes, int col_modes, const DomainMap& map, double alpha);

// Assembled operators plus the quadrature/evaluation tables reused every step.
struct OperatorSet {
    int N = 0;        // polynomial degree bound
    int K = 0;        // mode count N-1
    DomainMap map;
    double alpha = 2.0;
    Mat M;            // K x K
    Mat S;            // K x K
    QuadRule lgl;                  // ceil(5N/2)+3 nodes: exact for the quintic integrands
    std::vector<double> x_nodes;   // LGL nodes mapped to [a,b]
    Vec w;                         // LGL weights
    Mat V;            // Q x K basis values at the LGL nodes
    Mat G;            // K x Q Galerkin contraction: G f = (f, sigma_l) with Jacobian

    OperatorSet(int N, const DomainMap& map, double alpha);
};

// Pointwise values sum_k c_k sigma_k at the rows of a basis table.
CVec synthesize(const Mat& table, const CVec& coeffs);
Vec synthesize(const Mat& table, const Vec& coeffs);

// v_l = integral of f * sigma_l over [a,b] by the LGL rule of ops.
CVec galerkin_rhs(const OperatorSet& ops, const CVec& point_values);
Vec galerkin_rhs(const OperatorSet& ops, const Vec& point_values);

// integral of f over [a,b] by the LGL rule of ops.
double integrate(const OperatorSet& ops, const Vec& point_values);

struct NonlinearVectors {
    CVec N1;  // ((Un + Us)(Phin + Phis), sigma_l)
    CVec N2;  // ((|Un|^2 + |Us|^2)(Un + Us)(Phin + Phis), sigma_l)
    Vec N3;   // (|Un|^2 + |Us|^2, sigma_l)
    Vec N4;   // (|Un|^4 + |Us|^4, sigma_l)
};

// All inputs are grid values on the LGL nodes of ops.
NonlinearVectors nonlinear_vectors(const OperatorSet& ops, const CVec& Un_vals,
                                   const CVec& Us_vals, const Vec& Phin_vals,
                                   const Vec& Phis_vals);

enum class InitMode { b_proj, l2 };

// Projection of boundary-compatible initial data onto the solution space.
// l2:     M c = (f, sigma_l)
// b_proj: fractional-elliptic projection B(f - U, sigma_l) = 0, realized through
//         a degree-2N L2 surrogate and the rectangular cross stiffness.
Vec project_initial(const OperatorSet& ops, const std::function<double(double)>& f, InitMode mode);
CVec project_initial(const OperatorSet& ops, const std::function<Cplx(double)>& f, InitMode mode);

}  // namespace fnkgs
