#pragma once
// Uniform random involutions / perfect matchings and Monte Carlo histograms
// of longest monotone subsequence lengths.
//
// RNG: counter-based (SplitMix64-style output function over (seed, stream,
// counter)), so per-chunk substreams are reproducible independently of
// thread scheduling.

#include "limdist/cases.hpp"
#include "limdist/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace limdist {

class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64();
    // uniform in [0, 1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }
    // uniform in {0, ..., bound-1}, unbiased
    std::uint32_t next_below(std::uint32_t bound);

  private:
    std::uint64_t seed_, stream_, counter_ = 0;
};

// Uniform involution of S_n: built right-to-left, the largest unplaced
// element is a fixed point with probability I_{k-1}/I_k else paired with a
// uniform unplaced partner; O(n) per sample.
Permutation sample_involution(int n, RngStream& rng);

// Uniform fixed-point-free involution (perfect matching) of S_{2 n_pairs}.
Permutation sample_fpf_involution(int n_pairs, RngStream& rng);

struct Histogram {
    Case tag = Case::Inv;
    int n = 0;  // pairs for fpf cases (permutation size 2n), size for inv
    std::map<int, long long> counts;  // key: observed length value L
    long long samples = 0;
    std::uint64_t seed = 0;

    std::string to_csv() const;  // case,n,l,count,samples,seed
};

// Deterministic for fixed seed regardless of thread count: samples are
// partitioned into fixed chunks, chunk index = RNG stream id.
Histogram simulate_lengths(Case c, int n, long long samples, std::uint64_t seed, int threads);

}  // namespace limdist
