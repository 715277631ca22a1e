#include "pnb/chowring.hpp"

#include <stdexcept>

namespace pnb {

ChernVector::ChernVector(int n_, Int rank_, std::vector<Int> c_)
    : n(n_), rank(std::move(rank_)), c(std::move(c_)) {
    if (n < 1) throw std::invalid_argument("ChernVector: ambient dimension must be >= 1");
    c.resize(static_cast<std::size_t>(n), Int(0));
}

bool ChernVector::is_honest_bundle_class() const {
    if (rank < 0) return false;
    for (int i = 1; i <= n; ++i)
        if (rank < i && c_at(i) != 0) return false;
    return true;
}

ChernVector ChernVector::trivial(int n, Int rank) {
    return ChernVector(n, std::move(rank), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
}

const Int& ChernVector::c_at(int i) const {
    if (i < 1 || i > n) throw std::out_of_range("ChernVector::c_at");
    return c[static_cast<std::size_t>(i - 1)];
}

RationalChowClass chow_mul(const RationalChowClass& x, const RationalChowClass& y) {
    if (x.n != y.n) throw std::invalid_argument("chow_mul: mismatched ambient dimension");
    RationalChowClass r(x.n);
    for (int i = 0; i <= x.n; ++i)
        for (int j = 0; i + j <= x.n; ++j) r.a[i + j] += x.a[i] * y.a[j];
    return r;
}

namespace {

// Total-class coefficient vectors of length n+1 with t[0] = 1.
std::vector<Int> total(const ChernVector& a) {
    std::vector<Int> t(static_cast<std::size_t>(a.n) + 1, Int(0));
    t[0] = 1;
    for (int i = 1; i <= a.n; ++i) t[static_cast<std::size_t>(i)] = a.c_at(i);
    return t;
}

ChernVector from_total(int n, Int rank, const std::vector<Int>& t) {
    std::vector<Int> c(t.begin() + 1, t.end());
    return ChernVector(n, std::move(rank), std::move(c));
}

} // namespace

ChernVector chern_mul(const ChernVector& a, const ChernVector& b) {
    if (a.n != b.n) throw std::invalid_argument("chern_mul: mismatched ambient dimension");
    std::vector<Int> ta = total(a), tb = total(b), tr(static_cast<std::size_t>(a.n) + 1, Int(0));
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; i + j <= a.n; ++j)
            tr[static_cast<std::size_t>(i + j)] += ta[static_cast<std::size_t>(i)] * tb[static_cast<std::size_t>(j)];
    return from_total(a.n, a.rank + b.rank, tr);
}

ChernVector chern_inv(const ChernVector& a) {
    std::vector<Int> t = total(a);
    std::vector<Int> inv(t.size(), Int(0));
    inv[0] = 1;
    for (std::size_t k = 1; k < t.size(); ++k) {
        Int s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += t[j] * inv[k - j];
        inv[k] = -s;
    }
    return from_total(a.n, -a.rank, inv);
}

ChernVector chern_dual(const ChernVector& a) {
    ChernVector r = a;
    for (int i = 1; i <= a.n; i += 2) r.c[static_cast<std::size_t>(i - 1)] = -r.c[static_cast<std::size_t>(i - 1)];
    return r;
}

ChernVector chern_twist(const ChernVector& a, long t) {
    // c_k(E(t)) = sum_j C(rank-j, k-j) t^{k-j} c_j(E), as a polynomial
    // identity in the rank (splitting principle).
    std::vector<Int> ta = total(a), tr(ta.size(), Int(0));
    for (int k = 0; k <= a.n; ++k) {
        Int s = 0;
        for (int j = 0; j <= k; ++j)
            s += binomial(a.rank - j, k - j) * pow_int(Int(t), k - j) * ta[static_cast<std::size_t>(j)];
        tr[static_cast<std::size_t>(k)] = s;
    }
    return from_total(a.n, a.rank, tr);
}

RationalChowClass chern_character(const ChernVector& a) {
    // Newton's identities: p_k = sum_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
    const int n = a.n;
    std::vector<Int> e(static_cast<std::size_t>(n) + 1, Int(0));
    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i)] = a.c_at(i);
    std::vector<Int> p(static_cast<std::size_t>(n) + 1, Int(0));
    for (int k = 1; k <= n; ++k) {
        Int s = (k % 2 == 1 ? Int(k) : Int(-k)) * e[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i) {
            Int term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
            s += (i % 2 == 1) ? term : -term;
        }
        p[static_cast<std::size_t>(k)] = s;
    }
    RationalChowClass ch(n);
    ch.a[0] = Rat(a.rank);
    for (int k = 1; k <= n; ++k) ch.a[static_cast<std::size_t>(k)] = make_rat(p[static_cast<std::size_t>(k)], factorial(k));
    return ch;
}

RationalChowClass todd_pn(int n) {
    // h/(1-e^{-h}) = 1 / (sum_{j>=0} (-h)^j/(j+1)!), then (n+1)-st power.
    RationalChowClass den(n);
    for (int j = 0; j <= n; ++j) {
        Rat coeff = make_rat(1, factorial(j + 1));
        den.a[static_cast<std::size_t>(j)] = (j % 2 == 0) ? coeff : -coeff;
    }
    RationalChowClass base(n);
    base.a[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += den.a[static_cast<std::size_t>(j)] * base.a[static_cast<std::size_t>(k - j)];
        base.a[static_cast<std::size_t>(k)] = -s;
    }
    RationalChowClass td(n);
    td.a[0] = 1;
    for (int i = 0; i < n + 1; ++i) td = chow_mul(td, base);
    return td;
}

Int euler_characteristic(const ChernVector& a, long l) {
    RationalChowClass ch = chern_character(a);
    // multiply by e^{lh}
    RationalChowClass exp_l(a.n);
    for (int j = 0; j <= a.n; ++j) exp_l.a[static_cast<std::size_t>(j)] = make_rat(pow_int(Int(l), j), factorial(j));
    RationalChowClass t = chow_mul(chow_mul(ch, exp_l), todd_pn(a.n));
    return to_int(t.a[static_cast<std::size_t>(a.n)]);
}

ChernVector p_functor(const ChernVector& a) {
    ChernVector r = chern_inv(chern_dual(a));
    r.rank = a.rank;
    return r;
}

SchwarzenbergerResult schwarzenberger_full(const ChernVector& a) {
    if (a.n != 4) throw std::invalid_argument("schwarzenberger: requires n = 4");
    const Int &c1 = a.c_at(1), &c2 = a.c_at(2), &c3 = a.c_at(3), &c4 = a.c_at(4);
    SchwarzenbergerResult r;
    Int lhs = (2 * c1 + 3) * (c3 - c1 * c2) + c2 * c2 + c2 - 2 * c4;
    r.mod12 = (lhs % 12 == 0);
    r.parity = ((c3 - c1 * c2) % 2 == 0);
    return r;
}

bool schwarzenberger(const ChernVector& a) { return schwarzenberger_full(a).holds(); }

RankFormulaResult rank_formula(const Int& c2, const Int& c3, const Int& c4, const Int& h2_e_dual) {
    RankFormulaResult r;
    r.value = make_rat(5 * c3 + 2 * c4 - c2 * (c2 - 10), 12) + Rat(h2_e_dual);
    r.integral = is_integral(r.value);
    return r;
}

Rat rr_h2_minus_h1(const Int& c2, const Int& c3, const Int& c4) {
    const Int c1 = 5;
    // chi(O_{P^4}(c1 - 3)) = chi(O_{P^4}(2)) = 15
    Rat chi2 = Rat(binomial(Int(2 + 4), 4));
    return chi2 + make_rat((2 * c1 - 3) * (c3 - c1 * c2) + c2 * c2 + c2 - 2 * c4, 12);
}

} // namespace pnb
