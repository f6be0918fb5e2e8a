#include "limdist/termtable.hpp"

#include "limdist/edge.hpp"

#include <sstream>
#include <stdexcept>

namespace limdist {

namespace {

Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

RatPoly trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

}  // namespace

RatPoly poly_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * rat(static_cast<long>(i)));
    return trim(d);
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
    RatPoly s(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) s[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) s[i] += b[i];
    return trim(std::move(s));
}

RatPoly poly_scale(const RatPoly& p, const Rat& c) {
    RatPoly s;
    for (const auto& x : p) s.push_back(x * c);
    return trim(std::move(s));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly s(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s[i + j] += a[i] * b[j];
    return trim(std::move(s));
}

double poly_eval(const RatPoly& p, double t) {
    double v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + it->get_d();
    return v;
}

std::string poly_to_string(const RatPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << p[i].get_str() << ")";
        if (i == 1) os << "*t";
        if (i > 1) os << "*t^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

TermExpr& TermExpr::add(int k, RatPoly p) {
    auto it = terms.find(k);
    if (it == terms.end())
        terms.emplace(k, std::move(p));
    else
        it->second = poly_add(it->second, p);
    return *this;
}

TermExpr TermExpr::derivative(int order) const {
    TermExpr cur = *this;
    for (int pass = 0; pass < order; ++pass) {
        TermExpr next;
        for (const auto& [k, p] : cur.terms) {
            RatPoly dp = poly_derivative(p);
            if (!dp.empty()) next.add(k, std::move(dp));
            next.add(k + 1, p);
        }
        cur = std::move(next);
    }
    return cur.normalized();
}

TermExpr TermExpr::plus(const TermExpr& o) const {
    TermExpr s = *this;
    for (const auto& [k, p] : o.terms) {
        auto it = s.terms.find(k);
        if (it == s.terms.end())
            s.terms.emplace(k, p);
        else
            it->second = poly_add(it->second, p);
    }
    return s.normalized();
}

TermExpr TermExpr::scaled(const Rat& c) const {
    TermExpr s;
    for (const auto& [k, p] : terms) s.terms.emplace(k, poly_scale(p, c));
    return s.normalized();
}

TermExpr TermExpr::times(const RatPoly& q) const {
    TermExpr s;
    for (const auto& [k, p] : terms) s.terms.emplace(k, poly_mul(p, q));
    return s.normalized();
}

TermExpr TermExpr::normalized() const {
    TermExpr s;
    for (const auto& [k, p] : terms) {
        RatPoly t = trim(p);
        if (!t.empty()) s.terms.emplace(k, std::move(t));
    }
    return s;
}

bool TermExpr::operator==(const TermExpr& o) const {
    return normalized().terms == o.normalized().terms;
}

int TermExpr::max_order() const { return terms.empty() ? 0 : terms.rbegin()->first; }

double TermExpr::evaluate(int beta, double t) const {
    double v = 0;
    for (const auto& [k, p] : terms) {
        const double fk = k == 0 ? tracy_widom_cdf(beta, t) : tw_derivative(beta, k, t);
        v += poly_eval(p, t) * fk;
    }
    return v;
}

std::string TermExpr::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : normalized().terms) {
        if (!first) os << "  +  ";
        os << "[" << poly_to_string(p) << "] F^(" << k << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Shorthand: entry from a list of (k, coefficient list low->high degree).
TermExpr make(std::initializer_list<std::pair<int, std::vector<Rat>>> kv) {
    TermExpr e;
    for (const auto& [k, p] : kv) e.terms.emplace(k, RatPoly(p));
    return e;
}

Rat R(long n, long d) { return rat(n, d); }

TermExpr hard2soft_term(int j) {
    switch (j) {
        case 1:
            return make({{1, {0, 0, R(3, 10)}}, {2, {R(-2, 5)}}});
        case 2:
            return make({{1, {R(9, 175), 0, 0, R(32, 175)}},
                         {2, {0, R(-32, 175), 0, 0, R(9, 200)}},
                         {3, {0, 0, R(-3, 25)}},
                         {4, {R(2, 25)}}});
        case 3:
            return make({{1, {0, R(268, 7875), 0, 0, R(1037, 7875)}},
                         {2, {0, 0, R(-33, 350), 0, 0, R(48, 875)}},
                         {3, {R(-578, 7875), 0, 0, R(-16, 125), 0, 0, R(9, 2000)}},
                         {4, {0, R(64, 875), 0, 0, R(-9, 500)}},
                         {5, {0, 0, R(3, 125)}},
                         {6, {R(-4, 375)}}});
        default:
            throw std::out_of_range("hard-to-soft term not transcribed for j > 3");
    }
}

TermExpr poisson_term(int j) {
    switch (j) {
        case 1:
            return make({{1, {0, 0, R(-1, 60)}}, {2, {R(-1, 5)}}});
        case 2:
            return make({{1, {R(9, 700), 0, 0, R(2, 1575)}},
                         {2, {0, R(11, 525), 0, 0, R(1, 7200)}},
                         {3, {0, 0, R(1, 300)}},
                         {4, {R(1, 50)}}});
        case 3:
            return make({{1, {0, R(-34, 7875), 0, 0, R(-41, 283500)}},
                         {2, {0, 0, R(-13, 3600), 0, 0, R(-1, 47250)}},
                         {3, {R(-289, 31500), 0, 0, R(-19, 31500), 0, 0, R(-1, 1296000)}},
                         {4, {0, R(-11, 2625), 0, 0, R(-1, 36000)}},
                         {5, {0, 0, R(-1, 3000)}},
                         {6, {R(-1, 750)}}});
        default:
            throw std::out_of_range("Poissonized term not transcribed for j > 3");
    }
}

TermExpr cdf_fpf_term(int j) {
    switch (j) {
        case 1:
            return make({{1, {0, 0, R(-1, 60)}}, {2, {R(-6, 5)}}});
        case 2:
            return make({{1, {R(-551, 700), 0, 0, R(2, 1575)}},
                         {2, {0, R(-43, 175), 0, 0, R(1, 7200)}},
                         {3, {0, 0, R(1, 50)}},
                         {4, {R(18, 25)}}});
        case 3:
            return make({{1, {0, R(-1144, 7875), 0, 0, R(-41, 283500)}},
                         {2, {0, 0, R(11, 1680), 0, 0, R(-1, 47250)}},
                         {3, {R(20413, 15750), 0, 0, R(9, 3500), 0, 0, R(-1, 1296000)}},
                         {4, {0, R(258, 875), 0, 0, R(-1, 6000)}},
                         {5, {0, 0, R(-3, 250)}},
                         {6, {R(-36, 125)}}});
        default:
            throw std::out_of_range("fixed-point-free CDF term not transcribed for j > 3");
    }
}

TermExpr cdf_inv_term(int j) {
    switch (j) {
        case 1:
            return TermExpr{};  // identically zero
        case 2:
            return make({{1, {0, 0, R(-1, 60)}}, {2, {R(-6, 5)}}});
        case 3:
            return make({{1, {0, R(1, 6)}}});
        case 4:
            return make({{1, {R(-363, 350), 0, 0, R(2, 1575)}},
                         {2, {0, R(-43, 175), 0, 0, R(1, 7200)}},
                         {3, {0, 0, R(1, 50)}},
                         {4, {R(18, 25)}}});
        case 5:
            return make({{1, {0, 0, R(-1, 90)}},
                         {2, {R(1, 10), 0, 0, R(-1, 360)}},
                         {3, {0, R(-1, 5)}}});
        case 6:
            return make({{1, {0, R(-323, 2625), 0, 0, R(-41, 283500)}},
                         {2, {0, 0, R(31, 1260), 0, 0, R(-1, 47250)}},
                         {3, {R(12569, 7875), 0, 0, R(9, 3500), 0, 0, R(-1, 1296000)}},
                         {4, {0, R(258, 875), 0, 0, R(-1, 6000)}},
                         {5, {0, 0, R(-3, 250)}},
                         {6, {R(-36, 125)}}});
        case 7:
            return make({{1, {R(117, 1400), 0, 0, R(1, 675)}},
                         {2, {0, R(-171, 700), 0, 0, R(1, 2520)}},
                         {3, {0, 0, R(-41, 1400), 0, 0, R(1, 43200)}},
                         {4, {R(-3, 25), 0, 0, R(1, 300)}},
                         {5, {0, R(3, 25)}}});
        default:
            throw std::out_of_range("involution CDF term not transcribed for j > 7");
    }
}

TermExpr pdf_incr_fpf_term(int j) {
    switch (j) {
        case 1:
            return make({{1, {0, R(-1, 30)}}, {2, {0, 0, R(-1, 60)}}, {3, {R(-139, 120)}}});
        case 2:
            return make({{1, {0, 0, R(2, 525)}},
                         {2, {R(-8711, 8400), 0, 0, R(23, 12600)}},
                         {3, {0, R(-1763, 8400), 0, 0, R(1, 7200)}},
                         {4, {0, 0, R(139, 7200)}},
                         {5, {R(6437, 9600)}}});
        case 3:
            return make({{1, {R(-761, 5250), 0, 0, R(-41, 70875)}},
                         {2, {0, R(-1573, 12000), 0, 0, R(-71, 283500)}},
                         {3, {0, 0, R(837, 56000), 0, 0, R(-13, 504000)}},
                         {4, {R(514831, 336000), 0, 0, R(613, 302400), 0, 0, R(-1, 1296000)}},
                         {5, {0, R(535313, 2016000), 0, 0, R(-139, 864000)}},
                         {6, {0, 0, R(-6437, 576000)}},
                         {7, {R(-2085527, 8064000)}}});
        default:
            throw std::out_of_range("density term not transcribed for j > 3");
    }
}

TermExpr pdf_decr_fpf_term(int j) {
    switch (j) {
        case 1:
            return make({{1, {0, R(-1, 30)}}, {2, {0, 0, R(-1, 60)}}, {3, {R(-31, 30)}}});
        case 2:
            return make({{1, {0, 0, R(2, 525)}},
                         {2, {R(-551, 525), 0, 0, R(23, 12600)}},
                         {3, {0, R(-467, 2100), 0, 0, R(1, 7200)}},
                         {4, {0, 0, R(31, 1800)}},
                         {5, {R(317, 600)}}});
        case 3:
            return make({{1, {R(-18, 125), 0, 0, R(-41, 70875)}},
                         {2, {0, R(-671, 5250), 0, 0, R(-71, 283500)}},
                         {3, {0, 0, R(17, 1000), 0, 0, R(-13, 504000)}},
                         {4, {R(7109, 5250), 0, 0, R(181, 75600), 0, 0, R(-1, 1296000)}},
                         {5, {0, R(31313, 126000), 0, 0, R(-31, 216000)}},
                         {6, {0, 0, R(-317, 36000)}},
                         {7, {R(-22403, 126000)}}});
        default:
            throw std::out_of_range("density term not transcribed for j > 3");
    }
}

TermExpr pdf_inv_term(int j) {
    switch (j) {
        case 1:
            return TermExpr{};  // identically zero
        case 2:
            return make({{1, {0, R(-1, 30)}}, {2, {0, 0, R(-1, 60)}}, {3, {R(-139, 120)}}});
        case 3:
            return make({{1, {R(1, 6)}}, {2, {0, R(1, 6)}}});
        case 4:
            return make({{1, {0, 0, R(2, 525)}},
                         {2, {R(-10811, 8400), 0, 0, R(23, 12600)}},
                         {3, {0, R(-1763, 8400), 0, 0, R(1, 7200)}},
                         {4, {0, 0, R(139, 7200)}},
                         {5, {R(6437, 9600)}}});
        case 5:
            return make({{1, {0, R(-1, 45)}},
                         {2, {0, 0, R(-7, 360)}},
                         {3, {R(-19, 240), 0, 0, R(-1, 360)}},
                         {4, {0, R(-139, 720)}}});
        case 6:
            return make({{1, {R(-1933, 15750), 0, 0, R(-41, 70875)}},
                         {2, {0, R(-291, 4000), 0, 0, R(-71, 283500)}},
                         {3, {0, 0, R(16633, 504000), 0, 0, R(-13, 504000)}},
                         {4, {R(612131, 336000), 0, 0, R(613, 302400), 0, 0, R(-1, 1296000)}},
                         {5, {0, R(535313, 2016000), 0, 0, R(-139, 864000)}},
                         {6, {0, 0, R(-6437, 576000)}},
                         {7, {R(-2085527, 8064000)}}});
        case 7:
            return make({{1, {0, 0, R(1, 225)}},
                         {2, {R(-331, 2016), 0, 0, R(29, 9450)}},
                         {3, {0, R(-15509, 50400), 0, 0, R(31, 60480)}},
                         {4, {0, 0, R(-6287, 302400), 0, 0, R(1, 43200)}},
                         {5, {R(-47, 2304), 0, 0, R(139, 43200)}},
                         {6, {0, R(6437, 57600)}}});
        default:
            throw std::out_of_range("density term not transcribed for j > 7");
    }
}

}  // namespace

int term_range(TableKind kind, Case c) {
    switch (kind) {
        case TableKind::Hard2Soft:
        case TableKind::Poisson:
            return 3;
        case TableKind::Cdf:
            return 3;  // fixed-point-free cases only
        case TableKind::CdfInv:
            return 7;
        case TableKind::Pdf:
            return c == Case::Inv ? 7 : 3;
    }
    throw std::invalid_argument("bad table kind");
}

TermExpr term_polynomials(TableKind kind, Case c, int j) {
    if (j < 1) throw std::out_of_range("term index must be >= 1");
    switch (kind) {
        case TableKind::Hard2Soft:
            return hard2soft_term(j);
        case TableKind::Poisson:
            return poisson_term(j);
        case TableKind::Cdf:
            if (c == Case::Inv)
                throw std::invalid_argument("fixed-point-free CDF table queried for case inv");
            return cdf_fpf_term(j);
        case TableKind::CdfInv:
            if (c != Case::Inv)
                throw std::invalid_argument("involution CDF table queried for a fpf case");
            return cdf_inv_term(j);
        case TableKind::Pdf:
            switch (c) {
                case Case::IncrFpf: return pdf_incr_fpf_term(j);
                case Case::DecrFpf: return pdf_decr_fpf_term(j);
                case Case::Inv: return pdf_inv_term(j);
            }
    }
    throw std::invalid_argument("bad table kind");
}

TermExpr pdf_from_cdf(Case c, int j) {
    const bool inv = c == Case::Inv;
    // eps-index advance per derivative step s: (s-1)/2 for the fpf cases
    // (h^2 = eps resp. 4 eps), s-1 for inv (h = eps).
    // (h/2)^(s-1): incr-fpf (eps^(1/2)/2)^(s-1), decr-fpf (eps^(1/2))^(s-1),
    // inv (eps/2)^(s-1).
    TermExpr out;
    for (int s = 1; s <= 7; s += 2) {
        const int step = inv ? s - 1 : (s - 1) / 2;
        const int i = j - step;
        if (i < 0) continue;
        Rat factor(1);
        for (int f = 2; f <= s; ++f) factor /= f;  // 1/s!
        if (c != Case::DecrFpf)
            for (int f = 1; f < s; ++f) factor /= 2;  // (1/2)^(s-1)
        TermExpr base;
        if (i == 0)
            base.add(0, {Rat(1)});
        else if (i <= term_range(inv ? TableKind::CdfInv : TableKind::Cdf, c))
            base = term_polynomials(inv ? TableKind::CdfInv : TableKind::Cdf, c, i);
        else
            throw std::out_of_range("central differencing needs an untranscribed CDF term");
        out = out.plus(base.derivative(s).scaled(factor));
    }
    return out.normalized();
}

std::string transcription_audit() {
    std::ostringstream os;
    auto dump = [&](const char* name, TableKind kind, Case c) {
        for (int j = 1; j <= term_range(kind, c); ++j)
            os << name << " j=" << j << ":  " << term_polynomials(kind, c, j).to_string()
               << "\n";
        os << "\n";
    };
    dump("hard-to-soft E_j", TableKind::Hard2Soft, Case::DecrFpf);
    dump("poissonized F_j", TableKind::Poisson, Case::DecrFpf);
    dump("cdf (fpf) F_j", TableKind::Cdf, Case::DecrFpf);
    dump("cdf (inv) F_j", TableKind::CdfInv, Case::Inv);
    dump("pdf (incr-fpf) F*_j", TableKind::Pdf, Case::IncrFpf);
    dump("pdf (decr-fpf) F*_j", TableKind::Pdf, Case::DecrFpf);
    dump("pdf (inv) F*_j", TableKind::Pdf, Case::Inv);
    return os.str();
}

}  // namespace limdist
