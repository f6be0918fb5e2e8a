#include "limdist/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace limdist {

QuadratureRule gauss_legendre(int m, double a, double b) {
    if (m < 1) throw std::invalid_argument("gauss_legendre: m must be >= 1");
    QuadratureRule r;
    r.a = a;
    r.b = b;
    r.nodes.resize(m);
    r.weights.resize(m);

    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const int half_count = (m + 1) / 2;
    for (int i = 0; i < half_count; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_m
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double p1 = 0;  // P'_m(x) at convergence
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_m and P'_m by the three-term recurrence
            double p0 = 1.0, pm1 = 0.0;
            for (int k = 0; k < m; ++k) {
                double pm2 = pm1;
                pm1 = p0;
                p0 = ((2 * k + 1) * x * pm1 - k * pm2) / (k + 1);
            }
            p1 = m * (x * p0 - pm1) / (x * x - 1.0);
            double dx = p0 / p1;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one extra polished step
                p0 = 1.0;
                pm1 = 0.0;
                for (int k = 0; k < m; ++k) {
                    double pm2 = pm1;
                    pm1 = p0;
                    p0 = ((2 * k + 1) * x * pm1 - k * pm2) / (k + 1);
                }
                p1 = m * (x * p0 - pm1) / (x * x - 1.0);
                x -= p0 / p1;
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * p1 * p1);
        r.nodes[i] = mid - half * x;
        r.nodes[m - 1 - i] = mid + half * x;
        r.weights[i] = half * w;
        r.weights[m - 1 - i] = half * w;
    }
    return r;
}

}  // namespace limdist
