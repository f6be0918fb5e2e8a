#include "limdist/hypothesis.hpp"

#include "limdist/cheb.hpp"
#include "limdist/special.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace limdist {

RationalFit rational_reconstruct(double x, long long max_den, double tol) {
    // Convergents of the continued fraction of x; the last one with
    // denominator within the bound is the best candidate.
    double r = x;
    long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(r)), q1 = 1;
    r -= std::floor(r);
    for (int it = 0; it < 64 && r > 1e-18; ++it) {
        r = 1.0 / r;
        const double fl = std::floor(r);
        if (fl > 9e17) break;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        r -= fl;
    }
    RationalFit f;
    f.num = p1;
    f.den = q1;
    f.snapped = std::abs(x - f.value()) < tol;
    return f;
}

std::string ReconstructionReport::to_json() const {
    nlohmann::json out;
    out["z"] = z;
    out["j"] = j;
    out["samples"] = samples;
    out["raw"] = raw;
    auto& cs = out["coefficients"] = nlohmann::json::array();
    for (const auto& c : coefficients) cs.push_back({c.num, c.den});
    out["residual"] = residual;
    out["tolerance"] = tolerance;
    out["pass"] = pass;
    return out.dump(2);
}

HypothesisLab::HypothesisLab(int quad_nodes) : nodes_(quad_nodes) {}

const DiscretizedKernel& HypothesisLab::kernel(int k, double s) {
    auto it = cache_.find({k, s});
    if (it != cache_.end()) return it->second;
    const QuadratureRule rule = gauss_legendre(nodes_, s, airy_truncation(s));
    KernelFn fn;
    switch (k) {
        case 0: fn = airy_kernel(); break;
        case 1: case 2: case 3: fn = transformed_kernel_fn(k); break;
        case 4: fn = l_kernel(); break;
        case 5: fn = airy_prime_kernel(); break;
        default: throw std::logic_error("bad kernel slot");
    }
    return cache_.emplace(std::make_pair(k, s), discretize(fn, rule)).first->second;
}

double HypothesisLab::fz(double z, double s) { return fredholm_det(kernel(0, s), z); }

std::pair<double, double> HypothesisLab::resolvent_edge(double z, double s) {
    const DiscretizedKernel& K = kernel(0, s);
    const auto& rule = K.rule;
    const int m = rule.size();
    Eigen::VectorXd u(m), up(m);
    for (int i = 0; i < m; ++i) {
        const double w = std::sqrt(rule.weights[i]);
        const auto [ai, aip] = airy_pair((s + rule.nodes[i]) / 2);
        u(i) = w * 0.5 * ai;
        up(i) = w * 0.25 * aip;
    }
    const Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m) - z * K.A;
    const Eigen::VectorXd v = M.partialPivLu().solve(u);
    const auto [ai, aip] = airy_pair(s);
    const double diag = z * 0.5 * ai + z * z * u.dot(v);
    const double pdiag = z * 0.25 * aip + z * z * up.dot(v);
    return {diag, pdiag};
}

double HypothesisLab::fz_prime(double z, double s) {
    return fz(z, s) * resolvent_edge(z, s).first;
}

double HypothesisLab::fz_second(double z, double s) {
    // With R the resolvent diagonal of the restricted kernel, the endpoint
    // derivative of log F contributes -R(s,s)^2, which cancels (F'/F)^2 in
    // F'' = F ((log F)'' + ((log F)')^2), leaving twice the partial of the
    // resolvent diagonal in its first argument.
    return fz(z, s) * 2.0 * resolvent_edge(z, s).second;
}

const std::vector<ChebInterp>& HypothesisLab::derivative_stack(double z) {
    auto it = deriv_.find(z);
    if (it != deriv_.end()) return it->second;
    std::vector<ChebInterp> d;
    d.emplace_back([&](double s) { return fz_prime(z, s); }, -8.5, 5.0, 320);
    d.emplace_back([&](double s) { return fz_second(z, s); }, -8.5, 5.0, 320);
    for (int k = 3; k <= 6; ++k) d.push_back(d.back().derivative());
    return deriv_.emplace(z, std::move(d)).first->second;
}

double HypothesisLab::fz_derivative(double z, int k, double s) {
    if (k < 1 || k > 6) throw std::out_of_range("derivative order must be 1..6");
    return derivative_stack(z)[k - 1](s);
}

double HypothesisLab::expansion_term(double z, int j, double s) {
    if (j < 1 || j > 3) throw std::out_of_range("expansion term index must be 1..3");
    if (z == 0) return 0;
    const DiscretizedKernel& K0 = kernel(0, s);
    std::vector<const DiscretizedKernel*> Kj;
    for (int k = 1; k <= j; ++k) Kj.push_back(&kernel(k, s));
    const std::vector<double> d = det_expansion_terms(K0, Kj, z, j);
    return fredholm_det(K0, z) * d[j - 1];
}

namespace {

// Ansatz basis per order: (derivative order of F_z, power of s).
const std::vector<std::vector<std::pair<int, int>>> kAnsatz = {
    {{2, 0}},
    {{1, 0}, {2, 1}, {4, 0}},
    {{1, 1}, {2, 2}, {3, 0}, {4, 1}, {6, 0}},
};

const std::vector<std::vector<double>> kSamples = {
    {-3.5},
    {-4.5, -3.5, -2.5},
    {-4.5, -4.0, -3.5, -3.0, -2.5},
};

}  // namespace

ReconstructionReport HypothesisLab::reconstruct(double z, int j, long long max_den) {
    if (j < 1 || j > 3) throw std::out_of_range("reconstruction order must be 1..3");
    ReconstructionReport rep;
    rep.z = z;
    rep.j = j;
    rep.samples = kSamples[j - 1];
    rep.tolerance = 2e-14 * std::pow(10.0, 3 * j);

    const auto& ansatz = kAnsatz[j - 1];
    auto phi = [&](std::size_t i, double s) {
        return std::pow(s, ansatz[i].second) * fz_derivative(z, ansatz[i].first, s);
    };

    const int n = static_cast<int>(ansatz.size());
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd b(n);
    for (int row = 0; row < n; ++row) {
        const double s = rep.samples[row];
        b(row) = expansion_term(z, j, s);
        for (int col = 0; col < n; ++col) A(row, col) = phi(col, s);
    }
    const Eigen::VectorXd a = A.fullPivLu().solve(b);

    bool all_snapped = true;
    for (int i = 0; i < n; ++i) {
        rep.raw.push_back(a(i));
        rep.coefficients.push_back(
            rational_reconstruct(a(i), max_den, 0.5 / (static_cast<double>(max_den) * max_den)));
        all_snapped = all_snapped && rep.coefficients.back().snapped;
    }

    // Misfit on a fresh grid (spacing 11/56 never hits the half-integer
    // sample points), using the snapped coefficients.
    for (int g = 0; g <= 56; ++g) {
        const double s = -7.0 + 11.0 * g / 56.0;
        double fit = 0;
        for (int i = 0; i < n; ++i)
            fit += (rep.coefficients[i].snapped ? rep.coefficients[i].value() : a(i)) * phi(i, s);
        rep.residual = std::max(rep.residual, std::abs(expansion_term(z, j, s) - fit));
    }
    rep.pass = all_snapped && rep.residual <= rep.tolerance;
    return rep;
}

std::pair<double, double> HypothesisLab::trace_identities(double s) {
    const Eigen::MatrixXd& L = kernel(4, s).A;
    const Eigen::MatrixXd& V = kernel(0, s).A;
    const Eigen::MatrixXd& Vp = kernel(5, s).A;
    const double tr_l = L.trace();
    const double tr_vp = Vp.trace();
    const double lhs = (V * L).trace();
    const double rhs = tr_vp * tr_vp - (Vp * Vp).trace();
    return {std::abs(tr_l), std::abs(lhs - rhs)};
}

HypothesisLab& hypothesis_lab() {
    static HypothesisLab lab;
    return lab;
}

double fz_determinant(double z, double s) { return hypothesis_lab().fz(z, s); }
double expansion_term_z(double z, int j, double s) {
    return hypothesis_lab().expansion_term(z, j, s);
}
ReconstructionReport reconstruct_coefficients(double z, int j, long long max_den) {
    return hypothesis_lab().reconstruct(z, j, max_den);
}
std::pair<double, double> trace_identity_check(double s) {
    return hypothesis_lab().trace_identities(s);
}

}  // namespace limdist
