#ifndef PNB_CHOWRING_HPP
#define PNB_CHOWRING_HPP

#include "pnb/rational.hpp"

#include <vector>

namespace pnb {

/// Rank plus integer Chern classes c_1..c_n of a (possibly formal) class on
/// P^n, i.e. coefficients of h^i in Z[h]/(h^{n+1}). The degree-0 coefficient
/// of the total Chern class is always 1. Formal classes (inverses, virtual
/// differences) may carry negative rank; honest bundle classes do not.
struct ChernVector {
    int n = 0;
    Int rank = 0;
    std::vector<Int> c; // length n, c[0] = c_1

    ChernVector() = default;
    ChernVector(int n_, Int rank_, std::vector<Int> c_);

    /// Trivial class of the given rank (all c_i = 0).
    static ChernVector trivial(int n, Int rank = 0);

    const Int& c_at(int i) const; // c_i, 1 <= i <= n

    /// rank >= 0 and c_i = 0 for i > rank.
    bool is_honest_bundle_class() const;

    bool operator==(const ChernVector& o) const { return n == o.n && rank == o.rank && c == o.c; }
};

/// Exact rational element of the Chow ring with degrees 0..n (Chern
/// characters, Todd classes and their products live here).
struct RationalChowClass {
    int n = 0;
    std::vector<Rat> a; // length n+1, a[0] = degree-0 part

    RationalChowClass() = default;
    explicit RationalChowClass(int n_) : n(n_), a(n_ + 1, Rat(0)) {}
};

RationalChowClass chow_mul(const RationalChowClass& x, const RationalChowClass& y);

// Whitney product: ranks add, total Chern classes multiply (truncated).
ChernVector chern_mul(const ChernVector& a, const ChernVector& b);

// Truncated inverse of the total Chern class (rank negates).
ChernVector chern_inv(const ChernVector& a);

ChernVector chern_dual(const ChernVector& a);          // c_i -> (-1)^i c_i
ChernVector chern_twist(const ChernVector& a, long t); // tensor by O(t)

/// Chern character r + sum p_k/k! h^k via Newton's identities.
RationalChowClass chern_character(const ChernVector& a);

/// Todd class of the tangent bundle of P^n, (h/(1-e^{-h}))^{n+1} truncated.
RationalChowClass todd_pn(int n);

/// chi(E(l)) by Hirzebruch-Riemann-Roch; throws if the rational result is
/// not an integer (which signals an inconsistent input class).
Int euler_characteristic(const ChernVector& a, long l = 0);

/// Chern classes of P(E) (the dual of the kernel of the evaluation map),
/// computed from the series identity c(P(E)) = 1/c(E^dual). The rank field
/// is passed through untouched: it is not determined by Chern data.
ChernVector p_functor(const ChernVector& a);

struct SchwarzenbergerResult {
    bool mod12 = false;  // (2c1+3)(c3 - c1c2) + c2^2 + c2 == 2c4  (mod 12)
    bool parity = false; // c3 == c1c2 (mod 2)
    bool holds() const { return mod12 && parity; }
};

/// Both congruences for a class on P^4.
SchwarzenbergerResult schwarzenberger_full(const ChernVector& a);
bool schwarzenberger(const ChernVector& a);

struct RankFormulaResult {
    Rat value;
    bool integral = false;
};

/// r = (5c3 + 2c4 - c2(c2-10))/12 + h^2(E^dual) for c_1 = 5 on P^4.
/// Pure arithmetic; non-integral values are reported, not rejected.
RankFormulaResult rank_formula(const Int& c2, const Int& c3, const Int& c4, const Int& h2_e_dual);

/// h^2(E(-3)) - h^1(E(-3)) = chi(O_{P^4}(2)) + ((2c1-3)(c3-c1c2)+c2^2+c2-2c4)/12
/// with c_1 = 5.
Rat rr_h2_minus_h1(const Int& c2, const Int& c3, const Int& c4);

} // namespace pnb

#endif
