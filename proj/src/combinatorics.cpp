#include "limdist/combinatorics.hpp"

#include "limdist/tables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace limdist {

bool is_involution(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        if (p[i] < 0 || p[i] >= n || p[p[i]] != i) return false;
    }
    return true;
}

namespace {

void enum_rec(Permutation& p, int i, bool fpf,
              const std::function<void(const Permutation&)>& visit) {
    const int n = static_cast<int>(p.size());
    while (i < n && p[i] != -1) ++i;
    if (i == n) {
        visit(p);
        return;
    }
    if (!fpf) {
        p[i] = i;
        enum_rec(p, i + 1, fpf, visit);
        p[i] = -1;
    }
    for (int j = i + 1; j < n; ++j) {
        if (p[j] != -1) continue;
        p[i] = j;
        p[j] = i;
        enum_rec(p, i + 1, fpf, visit);
        p[i] = p[j] = -1;
    }
}

}  // namespace

void enumerate_involutions(int n, bool fixed_point_free,
                           const std::function<void(const Permutation&)>& visit) {
    if (n < 0 || n > 14)
        throw std::invalid_argument("enumerate_involutions: n out of range [0, 14]");
    if (fixed_point_free && n % 2 != 0)
        throw std::invalid_argument("enumerate_involutions: fixed-point-free needs even n");
    Permutation p(n, -1);
    if (n == 0) {
        visit(p);
        return;
    }
    enum_rec(p, 0, fixed_point_free, visit);
}

int monotone_subseq_length(const Permutation& p, Direction d) {
    const int n = static_cast<int>(p.size());
    // patience sorting: piles[k] = smallest tail of an increasing subsequence
    // of length k+1
    std::vector<int> piles;
    piles.reserve(p.size());
    if (d == Direction::Increasing) {
        for (int v : p) {
            auto it = std::lower_bound(piles.begin(), piles.end(), v);
            if (it == piles.end()) piles.push_back(v);
            else *it = v;
        }
    } else {
        // LDS of p = LIS of the value-reversed permutation
        for (int v : p) {
            int w = n - 1 - v;
            auto it = std::lower_bound(piles.begin(), piles.end(), w);
            if (it == piles.end()) piles.push_back(w);
            else *it = w;
        }
    }
    return static_cast<int>(piles.size());
}

int monotone_subseq_length_dp(const Permutation& p, Direction d) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return 0;
    std::vector<int> len(n, 1);
    int best = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            bool ok = d == Direction::Increasing ? p[j] < p[i] : p[j] > p[i];
            if (ok) len[i] = std::max(len[i], len[j] + 1);
        }
        best = std::max(best, len[i]);
    }
    return best;
}

Int syt_count(const Partition& lambda) {
    const int rows = static_cast<int>(lambda.size());
    int n = 0;
    for (int i = 0; i < rows; ++i) {
        if (lambda[i] <= 0 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw std::invalid_argument("syt_count: not a partition");
        n += lambda[i];
    }
    // conjugate partition for column lengths
    std::vector<int> conj(rows == 0 ? 0 : lambda[0], 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda[i]; ++j) conj[j]++;
    // d_lambda = n! / prod of hooks
    Int hooks(1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    Int d = factorial(n);
    if (!mpz_divisible_p(d.get_mpz_t(), hooks.get_mpz_t()))
        throw std::logic_error("syt_count: hook product does not divide n!");
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), hooks.get_mpz_t());
    return d;
}

void enumerate_partitions(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0 || n > 40) throw std::invalid_argument("enumerate_partitions: n out of range [0, 40]");
    Partition parts;
    // streaming recursive descent, largest part first
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            visit(parts);
            return;
        }
        for (int k = std::min(rem, max_part); k >= 1; --k) {
            parts.push_back(k);
            rec(rem - k, k);
            parts.pop_back();
        }
    };
    rec(n, n);
}

Int rsk_count(Case c, int n, int l) {
    if (n < 1) throw std::invalid_argument("rsk_count: n must be >= 1");
    if (l < 1 || l > n) return Int(0);
    Int total(0);
    enumerate_partitions(n, [&](const Partition& lambda) {
        switch (c) {
            case Case::Inv:
                if (lambda[0] == l) total += syt_count(lambda);
                break;
            case Case::IncrFpf:
                if (static_cast<int>(lambda.size()) == l) {
                    Partition dl(lambda);
                    for (int& x : dl) x *= 2;
                    total += syt_count(dl);
                }
                break;
            case Case::DecrFpf:
                if (lambda[0] == l) {
                    Partition dl(lambda);
                    for (int& x : dl) x *= 2;
                    total += syt_count(dl);
                }
                break;
        }
    });
    return total;
}

Int goulden_count(int n, int l) {
    if (n < 1) throw std::invalid_argument("goulden_count: n must be >= 1");
    if (2 * l < n - 1) throw std::invalid_argument("goulden_count: requires l >= (n-1)/2");
    if (l > n) return Int(0);
    // (-1)^{n-l} sum_{i,j>=0, 2i+j<=n-l} (-1)^{i+j} n! I_j / (i! j! (n-i-j)!)
    std::vector<Int> I = involution_numbers(n - l);
    const Int nfac = factorial(n);
    Int total(0), term, denom;
    for (int i = 0; 2 * i <= n - l; ++i) {
        for (int j = 0; 2 * i + j <= n - l; ++j) {
            denom = factorial(i) * factorial(j) * factorial(n - i - j);
            term = nfac * I[j];
            if (!mpz_divisible_p(term.get_mpz_t(), denom.get_mpz_t()))
                throw std::logic_error("goulden_count: non-integer term");
            mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), denom.get_mpz_t());
            if ((i + j) % 2 == 0) total += term;
            else total -= term;
        }
    }
    if ((n - l) % 2 != 0) total = -total;
    if (sgn(total) < 0) throw std::logic_error("goulden_count: negative count");
    return total;
}

namespace {

// log of Gamma(1/2) Gamma(2/2) ... Gamma(l/2)
double log_gamma_half_product(int l) {
    double s = 0;
    for (int k = 1; k <= l; ++k) s += std::lgamma(0.5 * k);
    return s;
}

}  // namespace

double regev_estimate(Case c, double n, int l) { return std::exp(regev_log_estimate(c, n, l)); }

double regev_log_estimate(Case c, double n, int l) {
    if (l < 1) throw std::invalid_argument("regev_estimate: l must be >= 1");
    const double logpi = std::log(M_PI), log2 = std::log(2.0);
    double logv = 0;
    switch (c) {
        case Case::IncrFpf:
            logv = log2 + log_gamma_half_product(l) +
                   (2 * n + l * (l - 1) / 4.0) * std::log((double)l) - 0.5 * l * logpi -
                   l * log2 - (l * (l - 1) / 4.0) * std::log(2 * n);
            break;
        case Case::DecrFpf: {
            double logfacs = 0;
            for (int k = 1; k <= l; ++k) logfacs += std::lgamma(2.0 * k);  // (2k-1)!
            logv = log2 + logfacs + (2 * n + l * (double)l + l / 2.0) * std::log(2.0 * l) -
                   0.5 * l * logpi - (double)l * l * log2 -
                   (l * (double)l + l / 2.0) * std::log(2 * n);
            break;
        }
        case Case::Inv:
            logv = log_gamma_half_product(l) + (n + l * (l - 1) / 4.0) * std::log((double)l) -
                   0.5 * l * logpi - (l * (l - 1) / 4.0) * std::log(n);
            break;
    }
    return logv;
}

}  // namespace limdist
