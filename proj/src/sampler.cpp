#include "limdist/sampler.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace limdist {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Fixed-point probabilities I_{k-1}/I_k for k = 1..n, from the ratio
// recurrence rho_k = 1/(1 + (k-1) rho_{k-1}); the one knowingly inexact
// step of the sampler (relative error < 1e-15 per step).
std::vector<double> fixed_point_probs(int n) {
    std::vector<double> rho(n + 1, 1.0);
    for (int k = 2; k <= n; ++k) rho[k] = 1.0 / (1.0 + (k - 1) * rho[k - 1]);
    return rho;
}

}  // namespace

std::uint64_t RngStream::next_u64() {
    // counter-based: two rounds of the SplitMix64 finalizer over
    // (seed, stream, counter) with golden-ratio offsets
    std::uint64_t z = mix64(seed_ + 0x9e3779b97f4a7c15ULL * stream_);
    z = mix64(z ^ mix64(counter_++ + 0x9e3779b97f4a7c15ULL));
    return z;
}

std::uint32_t RngStream::next_below(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    // rejection sampling over the largest multiple of bound below 2^32
    const std::uint64_t limit = (0x100000000ULL / bound) * bound;
    for (;;) {
        std::uint64_t x = next_u64() >> 32;
        if (x < limit) return static_cast<std::uint32_t>(x % bound);
    }
}

Permutation sample_involution(int n, RngStream& rng) {
    if (n < 0) throw std::invalid_argument("sample_involution: n must be >= 0");
    static thread_local std::vector<double> rho;
    if ((int)rho.size() < n + 1) rho = fixed_point_probs(std::max(n, 1024));

    Permutation p(n, -1);
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    while (!avail.empty()) {
        int k = avail.back();  // largest unplaced element
        avail.pop_back();
        int m = static_cast<int>(avail.size()) + 1;  // elements unplaced incl. k
        if (rng.next_double() < rho[m]) {
            p[k] = k;
        } else {
            std::uint32_t idx = rng.next_below(static_cast<std::uint32_t>(avail.size()));
            int j = avail[idx];
            avail[idx] = avail.back();
            avail.pop_back();
            p[k] = j;
            p[j] = k;
        }
    }
    return p;
}

Permutation sample_fpf_involution(int n_pairs, RngStream& rng) {
    if (n_pairs < 0) throw std::invalid_argument("sample_fpf_involution: n_pairs must be >= 0");
    const int n = 2 * n_pairs;
    Permutation p(n, -1);
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    while (!avail.empty()) {
        int k = avail.back();
        avail.pop_back();
        std::uint32_t idx = rng.next_below(static_cast<std::uint32_t>(avail.size()));
        int j = avail[idx];
        avail[idx] = avail.back();
        avail.pop_back();
        p[k] = j;
        p[j] = k;
    }
    return p;
}

std::string Histogram::to_csv() const {
    std::ostringstream os;
    os << "case,n,l,count,samples,seed\n";
    for (auto& [l, c] : counts)
        os << case_name(tag) << ',' << n << ',' << l << ',' << c << ',' << samples << ',' << seed
           << '\n';
    return os.str();
}

Histogram simulate_lengths(Case c, int n, long long samples, std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("simulate_lengths: samples must be >= 1");
    if (threads < 1) threads = 1;

    constexpr long long kChunk = 4096;
    const long long n_chunks = (samples + kChunk - 1) / kChunk;

    std::atomic<long long> next_chunk{0};
    std::mutex merge_mutex;
    Histogram h;
    h.tag = c;
    h.n = n;
    h.samples = samples;
    h.seed = seed;

    auto worker = [&]() {
        std::map<int, long long> local;
        for (;;) {
            long long chunk = next_chunk.fetch_add(1);
            if (chunk >= n_chunks) break;
            RngStream rng(seed, static_cast<std::uint64_t>(chunk));
            long long lo = chunk * kChunk;
            long long hi = std::min(samples, lo + kChunk);
            for (long long s = lo; s < hi; ++s) {
                Permutation p = c == Case::Inv ? sample_involution(n, rng)
                                               : sample_fpf_involution(n, rng);
                int L = monotone_subseq_length(
                    p, c == Case::DecrFpf ? Direction::Decreasing : Direction::Increasing);
                local[L]++;
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (auto& [l, cnt] : local) h.counts[l] += cnt;
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return h;
}

}  // namespace limdist
