#pragma once
// Problem cases for longest monotone subsequences of random involutions:
//   IncrFpf : longest increasing subsequence, fixed-point-free involutions
//   DecrFpf : longest decreasing subsequence, fixed-point-free involutions
//   Inv     : longest increasing subsequence, all involutions
// Each case carries the derived symbol maps used by the scaling limits and
// expansions (limit-law index beta, size scale gamma, mean shift delta,
// index/intensity maps, density step width). They are centralized here so no
// call site re-derives a convention.

#include <cmath>
#include <stdexcept>
#include <string>

namespace limdist {

enum class Case { IncrFpf, DecrFpf, Inv };

inline const char* case_name(Case c) {
    switch (c) {
        case Case::IncrFpf: return "incr-fpf";
        case Case::DecrFpf: return "decr-fpf";
        case Case::Inv:     return "inv";
    }
    throw std::logic_error("bad case tag");
}

inline Case case_from_name(const std::string& s) {
    if (s == "incr-fpf") return Case::IncrFpf;
    if (s == "decr-fpf") return Case::DecrFpf;
    if (s == "inv")      return Case::Inv;
    throw std::invalid_argument("unknown case tag: " + s);
}

// Limit-law index beta: IncrFpf -> GSE (4), DecrFpf/Inv -> GOE (1).
inline int case_beta(Case c) { return c == Case::IncrFpf ? 4 : 1; }

// Size scale gamma: the scaling variable is t evaluated at r = gamma*n.
inline int case_gamma(Case c) { return c == Case::Inv ? 1 : 2; }

// Mean shift delta in E(L) = 2 sqrt(gamma n) + delta + ...
inline double case_delta(Case c) {
    switch (c) {
        case Case::IncrFpf: return 1.5;
        case Case::DecrFpf: return 0.0;
        case Case::Inv:     return -0.5;
    }
    throw std::logic_error("bad case tag");
}

// Index map l° used in the CDF scaling t_{l°}(r°).
inline double case_l_index(Case c, double l) {
    switch (c) {
        case Case::IncrFpf: return l - 1;
        case Case::DecrFpf: return 2 * l + 1;
        case Case::Inv:     return l;
    }
    throw std::logic_error("bad case tag");
}

// Index map l*° used by the finite-n CDF expansion evaluation point.
inline double case_l_star(Case c, double l) {
    switch (c) {
        case Case::IncrFpf: return l - 1;
        case Case::DecrFpf: return 2 * l + 1;
        case Case::Inv:     return l + 1;
    }
    throw std::logic_error("bad case tag");
}

// Intensity map r°: Poissonization intensity entering the hard-edge identity.
inline double case_r(Case c, double r) { return c == Case::Inv ? r * r : 2 * r; }

// Density step width h° at size n (spacing of t between consecutive l).
inline double case_h(Case c, double n) {
    switch (c) {
        case Case::IncrFpf: return std::pow(2 * n, -1.0 / 6.0);
        case Case::DecrFpf: return 2 * std::pow(2 * n, -1.0 / 6.0);
        case Case::Inv:     return std::pow(n, -1.0 / 6.0);
    }
    throw std::logic_error("bad case tag");
}

// Scaled variable t_nu(r) = (nu - 2 sqrt(r)) / r^{1/6}.
inline double scaled_variable(double nu, double r) {
    if (!(r > 0)) throw std::invalid_argument("scaled_variable: r must be > 0");
    return (nu - 2 * std::sqrt(r)) / std::pow(r, 1.0 / 6.0);
}

}  // namespace limdist
