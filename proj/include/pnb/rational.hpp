#ifndef PNB_RATIONAL_HPP
#define PNB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnb {

using Int = mpz_class;
using Rat = mpq_class;

/// Generalized binomial C(m, k) for arbitrary integer m and k >= 0:
/// m(m-1)...(m-k+1)/k!. Always an exact integer.
inline Int binomial(const Int& m, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= m - i;
    Int den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    return num / den;
}

inline Int binomial(long m, long k) { return binomial(Int(m), k); }

inline Int factorial(long k) {
    Int f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Int pow_int(const Int& b, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

/// Decimal string, rationals as "p/q", integers without the "/q" part.
inline std::string to_string(const Rat& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw std::domain_error("expected integral value, got " + to_string(q));
    return q.get_num();
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace pnb

#endif
