#pragma once
// Nystrom discretization of symmetric trace-class kernels, Fredholm
// determinants det(I - zK), resolvent traces, and the operator-determinant
// expansion terms d_1..d_3 (trace polynomials in E_j = (I - zK0)^{-1} K_j).

#include "limdist/quadrature.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace limdist {

using KernelFn = std::function<double(double, double)>;

struct DiscretizedKernel {
    Eigen::MatrixXd A;  // A_ij = sqrt(w_i w_j) K(x_i, x_j)
    QuadratureRule rule;
    std::string tag;
};

DiscretizedKernel discretize(const KernelFn& K, const QuadratureRule& rule,
                             const std::string& tag = "");

// det(I - zA) via pivoted LU; log-det guard against underflow (not expected
// at the scales used, but cheap).
double fredholm_det(const DiscretizedKernel& k, double z);

// Evaluates the determinant at m and 2m quadrature nodes on (a, b); throws
// std::runtime_error when the refinement moves the value by more than tol.
double fredholm_det_refined(const KernelFn& K, double a, double b, int m, double z, double tol);

// tr( E_{i1} E_{i2} ... ) with E_i = (I - z K0)^{-1} K_i, kernels on the
// same rule as K0.
double resolvent_trace(const DiscretizedKernel& K0, double z,
                       const std::vector<const DiscretizedKernel*>& product);

// d_1..d_j (j <= 3) of det(I - z K0 - sum_j h^j z K_j)
//   = det(I - z K0) (1 + sum_j d_j h^j + ...):
//   d_1 = -tr E_1
//   d_2 = (tr E_1)^2/2 - tr(E_1^2)/2 - tr E_2
//   d_3 = -(tr E_1)^3/6 + tr E_1 tr(E_1^2)/2 - tr(E_1 E_2 + E_2 E_1)/2
//         - tr(E_1^3)/3 + tr E_1 tr E_2 - tr E_3
std::vector<double> det_expansion_terms(const DiscretizedKernel& K0,
                                        const std::vector<const DiscretizedKernel*>& Kj, double z,
                                        int j);

// ---- kernel catalog ----

// Airy kernel V_Ai(x,y) = Ai((x+y)/2)/2.
KernelFn airy_kernel();
// Bessel kernel V_nu(x,y) = J_nu(sqrt(x y))/2.
KernelFn bessel_kernel(double nu);
// Hard-to-soft transition kernels K_1..K_3 (polynomials in u=(x+y)/2, v=xy
// times Ai(u), Ai'(u)).
KernelFn transition_kernel(int j);
// Appendix kernels of the determinant-expansion evidence pipeline:
// transformed kernels Ktilde_1..Ktilde_3.
KernelFn transformed_kernel_fn(int j);
double transformed_kernel(int j, double x, double y);
// Auxiliary trace-identity kernels: L(x,y) = (x-y)^2/16 Ai'((x+y)/2),
// V'_Ai = Ai'((x+y)/2)/2, V''_Ai = (x+y)/4 Ai((x+y)/2).
KernelFn l_kernel();
KernelFn airy_prime_kernel();
KernelFn airy_second_kernel();

// Default truncation point for semi-infinite intervals (t, infinity).
inline double airy_truncation(double t) { return (t > 0 ? t : 0) + 25.0; }

}  // namespace limdist
