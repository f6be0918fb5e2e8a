#pragma once
// Gauss-Legendre quadrature on a finite interval (a, b); semi-infinite
// integrals are realized by truncation (superexponential kernel decay makes
// the truncation error negligible; it is exercised by the shift tests).

#include <vector>

namespace limdist {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0, b = 0;

    int size() const { return static_cast<int>(nodes.size()); }
};

// m-point Gauss-Legendre rule on (a, b); nodes/weights via Newton iteration
// on the Legendre polynomial, accurate to machine precision.
QuadratureRule gauss_legendre(int m, double a, double b);

}  // namespace limdist
