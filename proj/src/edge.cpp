#include "limdist/edge.hpp"

#include "limdist/fredholm.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace limdist {

namespace {

// det(I -/+ V_Ai) on (t, inf), truncated; shares one discretization for
// both signs via the z argument of fredholm_det.
std::pair<double, double> airy_dets(double t, int quad_nodes) {
    auto K = discretize(airy_kernel(), gauss_legendre(quad_nodes, t, airy_truncation(t)));
    return {fredholm_det(K, 1.0), fredholm_det(K, -1.0)};
}

double combine(int beta, double Fp, double Fm) {
    switch (beta) {
        case 1: return Fp;
        case 2: return Fp * Fm;
        case 4: return 0.5 * (Fp + Fm);
        default: throw std::invalid_argument("beta must be 1, 2 or 4");
    }
}

// Panels on [lo, 0] and [0, hi] separately: the by-parts moment route
// integrates F left of 0 and F - 1 right of 0, so 0 must be a breakpoint.
std::vector<double> panel_breakpoints(double lo, double hi, double width) {
    std::vector<double> b;
    auto fill = [&](double a0, double b0) {
        const int p = std::max(1, static_cast<int>(std::ceil((b0 - a0) / width)));
        for (int i = 0; i < p; ++i) b.push_back(a0 + (b0 - a0) * i / p);
    };
    fill(lo, 0.0);
    fill(0.0, hi);
    b.push_back(hi);
    return b;
}

}  // namespace

int TracyWidom::beta_slot(int beta) {
    switch (beta) {
        case 1: return 0;
        case 2: return 1;
        case 4: return 2;
        default: throw std::invalid_argument("beta must be 1, 2 or 4");
    }
}

TracyWidom::TracyWidom(const EdgeConfig& cfg) : cfg_(cfg) {
    // Sample F_+ and F_- once at the Chebyshev points, then assemble all
    // three distributions from the same determinant evaluations.
    const int n = cfg.cheb_n;
    std::vector<double> v1(n + 1), v2(n + 1), v4(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double t = 0.5 * (cfg.cheb_lo + cfg.cheb_hi) +
                         0.5 * (cfg.cheb_hi - cfg.cheb_lo) * std::cos(std::acos(-1.0) * j / n);
        auto [Fp, Fm] = airy_dets(t, cfg.quad_nodes);
        v1[j] = Fp;
        v2[j] = Fp * Fm;
        v4[j] = 0.5 * (Fp + Fm);
    }
    // Re-interpolate through the sampled values (ChebInterp re-evaluates f
    // at the same points; wrap the samples in a lookup).
    auto from_samples = [&](const std::vector<double>& v) {
        int idx = 0;
        return ChebInterp([&v, &idx](double) { return v[idx++]; }, cfg.cheb_lo, cfg.cheb_hi, n);
    };
    F_.push_back(from_samples(v1));
    F_.push_back(from_samples(v2));
    F_.push_back(from_samples(v4));
    d_.assign(3, {});

    std::vector<double> bps =
        panel_breakpoints(cfg.moment_lo, cfg.moment_hi, cfg.panel_width);
    // Both wide representations sample the same Chebyshev points; memoize
    // the determinant pair so each point is evaluated once.
    std::map<double, std::pair<double, double>> memo;
    auto dets_at = [&](double t) -> const std::pair<double, double>& {
        auto it = memo.find(t);
        if (it == memo.end()) it = memo.emplace(t, airy_dets(t, cfg.quad_nodes)).first;
        return it->second;
    };
    auto f1 = [&](double t) { return dets_at(t).first; };
    auto f4 = [&](double t) {
        const auto& [Fp, Fm] = dets_at(t);
        return 0.5 * (Fp + Fm);
    };
    wide_.emplace_back(f1, bps, cfg.moment_panel_n);
    wide_.emplace_back(f4, bps, cfg.moment_panel_n);
    wided_.push_back(wide_[0].derivative(1));
    wided_.push_back(wide_[1].derivative(1));
}

const ChebInterp& TracyWidom::representation(int beta) const { return F_[beta_slot(beta)]; }

double TracyWidom::cdf_direct(int beta, double t) const {
    auto [Fp, Fm] = airy_dets(t, cfg_.quad_nodes);
    return combine(beta, Fp, Fm);
}

double TracyWidom::cdf(int beta, double t) const {
    if (t < -10.0 || t > 8.0) throw std::domain_error("tracy_widom_cdf: t outside [-10, 8]");
    if (t < cfg_.cheb_lo || t > cfg_.cheb_hi) return cdf_direct(beta, t);
    return F_[beta_slot(beta)](t);
}

double TracyWidom::derivative(int beta, int k, double t) const {
    if (k < 1 || k > 7) throw std::invalid_argument("tw_derivative: k must be 1..7");
    const double margin = 0.5;
    if (t < cfg_.cheb_lo + margin || t > cfg_.cheb_hi - margin)
        throw std::domain_error("tw_derivative: t outside the representation interval");
    auto& cache = d_[beta_slot(beta)];
    while (static_cast<int>(cache.size()) < k) {
        const ChebInterp& prev =
            cache.empty() ? F_[beta_slot(beta)] : cache.back();
        cache.push_back(prev.derivative(1));
    }
    return cache[k - 1](t);
}

double TracyWidom::moment(int beta, int j) const {
    if (j < 0 || j > 5) throw std::invalid_argument("tw_moment: j must be 0..5");
    const int slot = beta == 1 ? 0 : beta == 4 ? 1 : -1;
    if (slot < 0) throw std::invalid_argument("tw_moment: beta must be 1 or 4");
    // Integrate t^j F' panel by panel through a Chebyshev interpolant of the
    // integrand (the density is already polynomial per panel, so this is
    // exact up to the representation error).
    double s = 0.0;
    for (const auto& p : wided_[slot].panels()) {
        ChebInterp g([&](double t) { return std::pow(t, j) * p(t); }, p.lower(), p.upper(),
                     cfg_.moment_panel_n + j);
        s += g.integrate();
    }
    return s;
}

double TracyWidom::moment_by_parts(int beta, int j) const {
    if (j < 0 || j > 5) throw std::invalid_argument("tw_moment: j must be 0..5");
    const int slot = beta == 1 ? 0 : beta == 4 ? 1 : -1;
    if (slot < 0) throw std::invalid_argument("tw_moment: beta must be 1 or 4");
    const PanelledCheb& F = wide_[slot];
    if (j == 0) return 1.0 - F(F.lower());  // int F' = F(inf) - F(lo)
    // int_{lo}^{0} t^j F' = -j int t^{j-1} F + [t^j F]_{lo}^{0}
    // int_{0}^{hi} t^j F' = -j int t^{j-1} (F-1) + [t^j (F-1)]_{0}^{hi}
    double s = -std::pow(F.lower(), j) * F(F.lower()) -
               std::pow(F.upper(), j) * (1.0 - F(F.upper()));
    for (const auto& p : F.panels()) {
        const bool left = p.upper() <= 0.0;
        ChebInterp g([&](double t) { return std::pow(t, j - 1) * (left ? p(t) : p(t) - 1.0); },
                     p.lower(), p.upper(), cfg_.moment_panel_n + j);
        s -= j * g.integrate();
    }
    return s;
}

const TracyWidom& tracy_widom() {
    static const TracyWidom tw;
    return tw;
}

double tracy_widom_cdf(int beta, double t) { return tracy_widom().cdf(beta, t); }
double tw_derivative(int beta, int k, double t) { return tracy_widom().derivative(beta, k, t); }
double tw_moment(int beta, int j) { return tracy_widom().moment(beta, j); }

double hard_edge_gap(int beta, double s, double a, int quad_nodes) {
    if (s < 0) throw std::domain_error("hard_edge_gap: s must be >= 0");
    if (s == 0) return 1.0;
    const double b = std::sqrt(s);
    if (beta == 1) {
        const double nu = 2 * a + 1;
        return fredholm_det(discretize(bessel_kernel(nu), gauss_legendre(quad_nodes, 0.0, b)),
                            1.0);
    }
    if (beta == 4) {
        const double nu = a - 1;
        auto K = discretize(bessel_kernel(nu), gauss_legendre(quad_nodes, 0.0, b));
        return 0.5 * (fredholm_det(K, 1.0) + fredholm_det(K, -1.0));
    }
    throw std::invalid_argument("hard_edge_gap: beta must be 1 or 4");
}

double poissonized_cdf(Case c, int l, double r, int quad_nodes) {
    switch (c) {
        case Case::IncrFpf: return hard_edge_gap(4, 8 * r, l, quad_nodes);
        case Case::DecrFpf: return hard_edge_gap(1, 8 * r, l, quad_nodes);
        case Case::Inv: return hard_edge_gap(1, 4 * r * r, 0.5 * (l - 1), quad_nodes);
    }
    throw std::invalid_argument("poissonized_cdf: bad case");
}

double transition_term(int beta, int j, double t) {
    const auto& tw = tracy_widom();
    auto D = [&](int k) { return tw.derivative(beta, k, t); };
    const double t2 = t * t, t3 = t2 * t, t4 = t2 * t2, t5 = t4 * t, t6 = t3 * t3;
    switch (j) {
        case 1:
            return (3 * t2 / 10) * D(1) - (2.0 / 5) * D(2);
        case 2:
            return (9.0 / 175 + 32 * t3 / 175) * D(1) + (-32 * t / 175 + 9 * t4 / 200) * D(2) -
                   (3 * t2 / 25) * D(3) + (2.0 / 25) * D(4);
        case 3:
            return (268 * t / 7875 + 1037 * t4 / 7875) * D(1) +
                   (-33 * t2 / 350 + 48 * t5 / 875) * D(2) +
                   (-578.0 / 7875 - 16 * t3 / 125 + 9 * t6 / 2000) * D(3) +
                   (64 * t / 875 - 9 * t4 / 500) * D(4) + (3 * t2 / 125) * D(5) -
                   (4.0 / 375) * D(6);
        default:
            throw std::invalid_argument("transition_term: j must be 1..3");
    }
}

double hard_to_soft_probe(int beta, double nu, double t, int m) {
    if (nu < 20) throw std::domain_error("hard_to_soft_probe: nu must be >= 20");
    if (m < 0 || m > 3) throw std::invalid_argument("hard_to_soft_probe: m must be 0..3");
    const double h = std::pow(2.0, -1.0 / 3.0) * std::pow(nu, -2.0 / 3.0);
    const double omega = nu * (1 - h * t);
    const double phi = omega * omega;
    const double a = beta == 1 ? 0.5 * (nu - 1)
                   : beta == 4 ? nu + 1
                               : throw std::invalid_argument("probe: beta must be 1 or 4");
    double res = hard_edge_gap(beta, phi, a) - tracy_widom_cdf(beta, t);
    double hj = 1.0;
    for (int j = 1; j <= m; ++j) {
        hj *= h;
        res -= transition_term(beta, j, t) * hj;
    }
    return res;
}

}  // namespace limdist
