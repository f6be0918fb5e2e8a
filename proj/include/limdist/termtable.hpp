#pragma once
// Exact rational coefficient tables of the asymptotic expansion terms: each
// term is a linear combination sum_k p_k(t) F^{(k)}(t) of derivatives of
// the limit law with polynomial coefficients p_k. The tables are hard-coded
// rationals; a generated audit file lists every polynomial for review.
// Exact algebra (differentiation, linear combination) on the terms supports
// rational identity checks, e.g. deriving the density tables from the CDF
// tables by central differencing.

#include "limdist/cases.hpp"
#include "limdist/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace limdist {

// Polynomial in t with exact rational coefficients; index = power of t.
using RatPoly = std::vector<Rat>;

RatPoly poly_derivative(const RatPoly& p);
RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& p, const Rat& c);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
double poly_eval(const RatPoly& p, double t);
std::string poly_to_string(const RatPoly& p);

// sum_k terms[k](t) * F^{(k)}(t); k = 0 denotes F itself.
class TermExpr {
  public:
    std::map<int, RatPoly> terms;

    TermExpr() = default;
    explicit TermExpr(std::map<int, RatPoly> t) : terms(std::move(t)) {}

    TermExpr& add(int k, RatPoly p);
    TermExpr derivative(int order = 1) const;
    TermExpr plus(const TermExpr& o) const;
    TermExpr scaled(const Rat& c) const;
    // Multiply every polynomial by q(t).
    TermExpr times(const RatPoly& q) const;
    // Drop zero polynomials; canonical form for comparison.
    TermExpr normalized() const;
    bool operator==(const TermExpr& o) const;

    int max_order() const;
    // Evaluate with F = F_beta from the shared Tracy-Widom representation.
    double evaluate(int beta, double t) const;
    std::string to_string() const;
};

enum class TableKind {
    Hard2Soft,  // E_{beta,j}: hard-to-soft transition terms, j = 1..3
    Poisson,    // F_{beta,j}: Poissonized terms, j = 1..3
    Cdf,        // F_{o,j}: fixed-point-free CDF terms, j = 1..3
    CdfInv,     // F_{inv,j}: involution CDF terms, j = 1..7
    Pdf         // F*_{o,j}: density terms, j = 1..3 (fpf) / 1..7 (inv)
};

// Largest transcribed index j for the kind/case; requests beyond it throw.
int term_range(TableKind kind, Case c);

// The exact transcribed term; throws std::out_of_range("not transcribed")
// beyond the range, never silently truncates.
TermExpr term_polynomials(TableKind kind, Case c, int j);

// Density term derived from the CDF table by exact central differencing of
// G(t) = F(t) + sum_i F_{o,i}(t) eps^i with the case's increment h:
//   (G(t+h) - G(t))/h = sum_{s odd} (h/2)^{s-1}/s! * G^{(s)}(t + h/2),
// h expressed in powers of eps (eps = (2n)^{-1/3} fpf, n^{-1/6} inv).
// Must coincide with term_polynomials(Pdf, c, j) as a rational identity.
TermExpr pdf_from_cdf(Case c, int j);

// Human-readable dump of every transcribed table for review.
std::string transcription_audit();

}  // namespace limdist
