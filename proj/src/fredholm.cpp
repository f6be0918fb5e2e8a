#include "limdist/fredholm.hpp"

#include "limdist/special.hpp"

#include <cmath>
#include <stdexcept>

namespace limdist {

DiscretizedKernel discretize(const KernelFn& K, const QuadratureRule& rule,
                             const std::string& tag) {
    const int m = static_cast<int>(rule.nodes.size());
    DiscretizedKernel out;
    out.rule = rule;
    out.tag = tag;
    out.A.resize(m, m);
    std::vector<double> sw(m);
    for (int i = 0; i < m; ++i) sw[i] = std::sqrt(rule.weights[i]);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double a = sw[i] * sw[j] * K(rule.nodes[i], rule.nodes[j]);
            out.A(i, j) = a;
            out.A(j, i) = a;
        }
    }
    return out;
}

double fredholm_det(const DiscretizedKernel& k, double z) {
    const int m = static_cast<int>(k.A.rows());
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) - z * k.A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    // Accumulate in log space to guard against under/overflow of the product
    // of diagonal LU entries.
    double log_abs = 0.0;
    double sign = lu.permutationP().determinant();  // +1 or -1
    const auto& U = lu.matrixLU();
    for (int i = 0; i < m; ++i) {
        const double d = U(i, i);
        if (d == 0.0) return 0.0;
        log_abs += std::log(std::abs(d));
        if (d < 0) sign = -sign;
    }
    return sign * std::exp(log_abs);
}

double fredholm_det_refined(const KernelFn& K, double a, double b, int m, double z, double tol) {
    const double d1 = fredholm_det(discretize(K, gauss_legendre(m, a, b)), z);
    const double d2 = fredholm_det(discretize(K, gauss_legendre(2 * m, a, b)), z);
    if (std::abs(d1 - d2) > tol)
        throw std::runtime_error("fredholm_det_refined: no convergence under node doubling");
    return d2;
}

namespace {

// Solves (I - z A0) X = A for each kernel matrix A in `product`, returning
// tr(E_{i1} E_{i2} ...) with E_i = z (I - z A0)^{-1} A_i.
double trace_product(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu, double z,
                     const std::vector<const DiscretizedKernel*>& product) {
    if (product.empty()) throw std::invalid_argument("resolvent_trace: empty product");
    Eigen::MatrixXd P = z * lu.solve(product[0]->A);
    for (std::size_t i = 1; i < product.size(); ++i) P = P * (z * lu.solve(product[i]->A));
    return P.trace();
}

}  // namespace

double resolvent_trace(const DiscretizedKernel& K0, double z,
                       const std::vector<const DiscretizedKernel*>& product) {
    const int m = static_cast<int>(K0.A.rows());
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) - z * K0.A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    return trace_product(lu, z, product);
}

std::vector<double> det_expansion_terms(const DiscretizedKernel& K0,
                                        const std::vector<const DiscretizedKernel*>& Kj, double z,
                                        int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("det_expansion_terms: j must be 1..3");
    if (static_cast<int>(Kj.size()) < j)
        throw std::invalid_argument("det_expansion_terms: need kernels K_1..K_j");
    const int m = static_cast<int>(K0.A.rows());
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) - z * K0.A;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);

    std::vector<double> d;
    const double t1 = trace_product(lu, z, {Kj[0]});
    d.push_back(-t1);
    if (j >= 2) {
        const double t11 = trace_product(lu, z, {Kj[0], Kj[0]});
        const double t2 = trace_product(lu, z, {Kj[1]});
        d.push_back(0.5 * t1 * t1 - 0.5 * t11 - t2);
        if (j >= 3) {
            const double t111 = trace_product(lu, z, {Kj[0], Kj[0], Kj[0]});
            const double t12 = trace_product(lu, z, {Kj[0], Kj[1]});
            const double t21 = trace_product(lu, z, {Kj[1], Kj[0]});
            const double t3 = trace_product(lu, z, {Kj[2]});
            d.push_back(-t1 * t1 * t1 / 6.0 + 0.5 * t1 * t11 - 0.5 * (t12 + t21) -
                        t111 / 3.0 + t1 * t2 - t3);
        }
    }
    return d;
}

// ---- kernel catalog ----

KernelFn airy_kernel() {
    return [](double x, double y) { return 0.5 * airy_pair(0.5 * (x + y)).first; };
}

KernelFn bessel_kernel(double nu) {
    return [nu](double x, double y) { return 0.5 * bessel_j(nu, std::sqrt(x * y)); };
}

KernelFn transition_kernel(int j) {
    switch (j) {
        case 1:
            return [](double x, double y) {
                const double u = 0.5 * (x + y), v = x * y;
                const auto [ai, aip] = airy_pair(u);
                return (u / 10) * ai + (2 * u * u / 5 - v / 4) * aip;
            };
        case 2:
            return [](double x, double y) {
                const double u = 0.5 * (x + y), v = x * y;
                const double u2 = u * u, u3 = u2 * u, u5 = u3 * u2;
                const auto [ai, aip] = airy_pair(u);
                return (4 * u5 / 25 - u3 * v / 5 + u * v * v / 16 + 13 * u2 / 140 - v / 20) * ai +
                       (4 * u3 / 7 - 9 * u * v / 20 + 1.0 / 70) * aip;
            };
        case 3:
            return [](double x, double y) {
                const double u = 0.5 * (x + y), v = x * y;
                const double u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u5 = u4 * u, u6 = u3 * u3,
                             u7 = u4 * u3, v2 = v * v, v3 = v2 * v;
                const auto [ai, aip] = airy_pair(u);
                return (1228 * u6 / 2625 - 24 * u4 * v / 35 + 803 * u3 / 6300 + 21 * u2 * v2 / 80 -
                        v3 / 96 - u * v / 10 - 1.0 / 225) * ai +
                       (16 * u7 / 375 - 2 * u5 * v / 25 + u3 * v2 / 20 + 197 * u4 / 225 -
                        u * v3 / 96 - 253 * u2 * v / 280 + v2 / 8 + 37 * u / 3150) * aip;
            };
        default:
            throw std::invalid_argument("transition_kernel: j must be 1..3");
    }
}

double transformed_kernel(int j, double x, double y) {
    const double u = 0.5 * (x + y), v = x * y;
    const auto [ai, aip] = airy_pair(u);
    switch (j) {
        case 1:
            return -(u / 5) * ai + (u * u - v) / 10 * aip;
        case 2: {
            const double u2 = u * u, u3 = u2 * u, u5 = u3 * u2;
            return (7 * u5 - 14 * u3 * v + 7 * u * v * v - 88 * u2 + 52 * v) / 700 * ai +
                   (-12 * u3 + 12 * u * v + 5) / 350 * aip;
        }
        case 3: {
            const double u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u5 = u4 * u, u6 = u3 * u3,
                         u7 = u4 * u3, v2 = v * v, v3 = v2 * v;
            return (-69 * u6 + 117 * u4 * v - 27 * u2 * v2 - 990 * u3 - 21 * v3 + 1110 * u * v -
                    140) / 31500 * ai +
                   (21 * u7 - 63 * u5 * v + 63 * u3 * v2 - 1378 * u4 - 21 * u * v3 +
                    1976 * u2 * v - 598 * v2 + 100 * u) / 31500 * aip;
        }
        default:
            throw std::invalid_argument("transformed_kernel: j must be 1..3");
    }
}

KernelFn transformed_kernel_fn(int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("transformed_kernel_fn: j must be 1..3");
    return [j](double x, double y) { return transformed_kernel(j, x, y); };
}

KernelFn l_kernel() {
    return [](double x, double y) {
        const double d = x - y;
        return d * d / 16 * airy_pair(0.5 * (x + y)).second;
    };
}

KernelFn airy_prime_kernel() {
    return [](double x, double y) { return 0.5 * airy_pair(0.5 * (x + y)).second; };
}

KernelFn airy_second_kernel() {
    return [](double x, double y) { return 0.25 * (x + y) * airy_pair(0.5 * (x + y)).first; };
}

}  // namespace limdist
