#pragma once
// Exact rational truncated power series (Maclaurin coefficients c_0..c_N).
// All arithmetic is exact; exp/log use the standard O(N^2) formal power
// series recurrences. This is the reference representation; the table
// compiler uses a scaled big-integer fast path (see chazy.cpp) and is
// cross-checked against this one.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace limdist {

using Int = mpz_class;
using Rat = mpq_class;

class TruncatedSeries {
  public:
    TruncatedSeries() : coeff_(1, Rat(0)) {}
    explicit TruncatedSeries(int order) : coeff_(order + 1, Rat(0)) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }
    explicit TruncatedSeries(std::vector<Rat> c) : coeff_(std::move(c)) {
        if (coeff_.empty()) coeff_.assign(1, Rat(0));
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rat& operator[](int n) const { return coeff_.at(n); }
    Rat& operator[](int n) { return coeff_.at(n); }
    const std::vector<Rat>& coefficients() const { return coeff_; }

    TruncatedSeries truncated(int order) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rat& a) const;

    // exp(f), requiring f(0) = 0.
    TruncatedSeries exp() const;
    // log(f), requiring f(0) = 1.
    TruncatedSeries log() const;
    // Integral with the measure dx/x applied termwise: c_n -> c_n / n
    // (requires c_0 = 0); this is the map v |-> integral v dx/x.
    TruncatedSeries integrate_dx_over_x() const;
    // x * d/dx applied termwise: c_n -> n c_n.
    TruncatedSeries x_ddx() const;

    bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

  private:
    std::vector<Rat> coeff_;
};

Int factorial(unsigned long n);
Int double_factorial_odd(unsigned long n);  // (2n-1)!! = (2n)!/(2^n n!)

}  // namespace limdist
