#ifndef PNB_COHOMTAB_HPP
#define PNB_COHOMTAB_HPP

#include "pnb/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pnb {

/// h^0..h^n of O_{P^n}(a).
std::vector<Int> line_cohomology(int n, long a);

/// h^0..h^n of Omega^p_{P^n}(l) by Bott's formula.
std::vector<Int> bott(int n, int p, long l);

/// Weakly decreasing integer sequence (k_1 >= ... >= k_m) encoding the
/// intermediate cohomology of a stable rank-3 bundle G on P^3 with c_1 = -1.
struct Spectrum {
    std::vector<int> k;

    explicit Spectrum(std::vector<int> k_ = {});
    int length() const { return static_cast<int>(k.size()); }
    long sum() const;

    bool nonneg_connected() const;    // k >= 0 present => 0..k all present
    bool nonpos_connected() const;    // k <= -1 present => -1..k all present
    bool zero_or_double_minus1() const; // 0 absent => -1 occurs at least twice

    /// Strictly decreasing negative gap shape: some i (1-based, 2 <= i <= m-1)
    /// with -1 >= k_{i-1} > k_i > k_{i+1} and the tail strictly decreasing;
    /// returns the order -k_m of the resulting unstable plane.
    std::optional<int> unstable_plane_order() const;

    bool operator==(const Spectrum& o) const { return k == o.k; }
    bool operator<(const Spectrum& o) const { return k < o.k; }
    std::string to_string() const;
};

/// h^1(G(l)) = h^0((+) O_{P^1}(k_i + l + 1)), valid for l <= -1.
Int spectrum_h1(const Spectrum& s, long l);

/// h^2(G(l)) = h^1((+) O_{P^1}(k_i + l + 1)), valid for l >= -2.
Int spectrum_h2(const Spectrum& s, long l);

struct SpectrumOptions {
    /// Restrict to k_1 <= 0 (the H^1(E_H(-4)) = 0 context).
    bool k1_nonpositive = false;
};

/// All spectra of stable rank-3 bundles G with c_1(G) = -1, c_2(G) = c2G,
/// c_3(G) = c3G such that G(2) is globally generated: length m = c2G,
/// entries in [-2, 1], sum -(c3G + c2G)/2, connectedness rules, minus the
/// impossible-spectra list. Lexicographically ordered output.
std::vector<Spectrum> enumerate_spectra(int c2G, long c3G, const SpectrumOptions& opts = {});

/// h^1(F(-2)) = (5(c2-8) - c3)/2 and h^1(F(-1)) = (7(c2-10) - c3)/2 + h^0(F(-1))
/// for a globally generated F on P^3 with c_1 = 5 and H^0(F(-2)) = 0.
std::pair<Int, Int> h1_formulas(const Int& c2, const Int& c3, const Int& h0_f_m1);

/// h^0(F(-1)) <= max((c3 - 7)/2, 1) for c_2 = 11.
Int h0fm1_bound_c2_11(const Int& c3);

/// Bilinear Map Lemma bound: a family of maps k^a -> Hom(k^b, k^c) with
/// every nonzero member of rank >= r can exist only if a <= (b-r+1)(c-r+1).
bool bml_bound(const Int& a, const Int& b, const Int& c, const Int& r);

/// d_{n-1} + d_n for the kernel K of an epimorphism (+)O(-d_i) -> O on P^n.
long koszul_gg_threshold(int n, std::vector<long> degrees);

/// K(l) globally generated iff l >= koszul_gg_threshold.
bool koszul_gg(int n, std::vector<long> degrees, long l);

/// Cohomology dimensions over a twist window; entries may be undetermined.
struct CohomologyTable {
    int n = 0;
    long l_min = 0, l_max = 0;
    // dims[l - l_min][q], q = 0..n
    std::vector<std::vector<std::optional<Int>>> dims;

    CohomologyTable() = default;
    CohomologyTable(int n_, long lmin, long lmax);

    std::optional<Int>& at(long l, int q);
    const std::optional<Int>& at(long l, int q) const;
    bool fully_determined(long l) const;
    /// Alternating sum over q; only valid when fully determined at l.
    Int chi(long l) const;
};

} // namespace pnb

#endif
