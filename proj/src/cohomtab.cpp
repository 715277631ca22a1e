#include "pnb/cohomtab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pnb {

std::vector<Int> line_cohomology(int n, long a) {
    if (n < 1) throw std::invalid_argument("line_cohomology: n must be >= 1");
    std::vector<Int> h(static_cast<std::size_t>(n) + 1, Int(0));
    if (a >= 0) h[0] = binomial(Int(a + n), n);
    if (a <= -n - 1) h[static_cast<std::size_t>(n)] = binomial(Int(-a - 1), n);
    return h;
}

std::vector<Int> bott(int n, int p, long l) {
    if (n < 1) throw std::invalid_argument("bott: n must be >= 1");
    if (p < 0 || p > n) throw std::invalid_argument("bott: p out of range");
    std::vector<Int> h(static_cast<std::size_t>(n) + 1, Int(0));
    if (l > p) {
        h[0] = binomial(Int(l + n - p), n - p) * binomial(Int(l - 1), p);
    } else if (l == 0) {
        h[static_cast<std::size_t>(p)] = 1;
    } else if (l < p - n) {
        h[static_cast<std::size_t>(n)] = binomial(Int(p - l), -l) * binomial(Int(-l - 1), n - p);
    }
    return h;
}

Spectrum::Spectrum(std::vector<int> k_) : k(std::move(k_)) {
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i - 1] < k[i]) throw std::invalid_argument("Spectrum: sequence must be weakly decreasing");
}

long Spectrum::sum() const {
    long s = 0;
    for (int x : k) s += x;
    return s;
}

bool Spectrum::nonneg_connected() const {
    std::set<int> vals(k.begin(), k.end());
    for (int x : vals)
        if (x >= 0)
            for (int y = 0; y <= x; ++y)
                if (!vals.count(y)) return false;
    return true;
}

bool Spectrum::nonpos_connected() const {
    std::set<int> vals(k.begin(), k.end());
    for (int x : vals)
        if (x <= -1)
            for (int y = x; y <= -1; ++y)
                if (!vals.count(y)) return false;
    return true;
}

bool Spectrum::zero_or_double_minus1() const {
    long zeros = std::count(k.begin(), k.end(), 0);
    if (zeros > 0) return true;
    return std::count(k.begin(), k.end(), -1) >= 2;
}

std::optional<int> Spectrum::unstable_plane_order() const {
    const int m = length();
    for (int i = 1; i + 1 < m; ++i) { // 0-based middle index
        if (k[static_cast<std::size_t>(i - 1)] <= -1 && k[static_cast<std::size_t>(i - 1)] > k[static_cast<std::size_t>(i)] &&
            k[static_cast<std::size_t>(i)] > k[static_cast<std::size_t>(i + 1)]) {
            for (int j = i + 1; j + 1 < m; ++j)
                if (k[static_cast<std::size_t>(j)] <= k[static_cast<std::size_t>(j + 1)]) return std::nullopt;
            return -k.back();
        }
    }
    return std::nullopt;
}

std::string Spectrum::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << ")";
    return out.str();
}

Int spectrum_h1(const Spectrum& s, long l) {
    if (l > -1) throw std::invalid_argument("spectrum_h1: valid only for l <= -1");
    Int total = 0;
    for (int ki : s.k) {
        long d = ki + l + 1;
        if (d >= 0) total += d + 1;
    }
    return total;
}

Int spectrum_h2(const Spectrum& s, long l) {
    if (l < -2) throw std::invalid_argument("spectrum_h2: valid only for l >= -2");
    Int total = 0;
    for (int ki : s.k) {
        long d = ki + l + 1;
        if (d <= -2) total += -d - 1;
    }
    return total;
}

namespace {

void enumerate_rec(int m, long target, int maxval, std::vector<int>& cur, std::vector<Spectrum>& out) {
    if (static_cast<int>(cur.size()) == m) {
        if (target == 0) out.emplace_back(cur);
        return;
    }
    int remaining = m - static_cast<int>(cur.size());
    for (int v = maxval; v >= -2; --v) {
        long rest = target - v;
        if (rest > static_cast<long>(remaining - 1) * v) continue; // remaining entries <= v each
        if (rest < -2L * (remaining - 1)) continue;
        cur.push_back(v);
        enumerate_rec(m, rest, v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Spectrum> enumerate_spectra(int c2G, long c3G, const SpectrumOptions& opts) {
    if (c2G < 1 || c2G > 4) throw std::invalid_argument("enumerate_spectra: c2G must be in [1, 4]");
    if ((c3G + c2G) % 2 != 0) throw std::invalid_argument("enumerate_spectra: c3G + c2G must be even");
    long target = -(c3G + c2G) / 2; // sum of the spectrum
    static const std::vector<std::vector<int>> excluded = {
        {1, 0, -1}, {0, -1, -2, -2}, {1, 0, -1, -2}, {1, 0, -1, -1}};

    std::vector<Spectrum> all;
    std::vector<int> cur;
    enumerate_rec(c2G, target, opts.k1_nonpositive ? 0 : 1, cur, all);

    std::vector<Spectrum> out;
    for (const Spectrum& s : all) {
        if (!s.nonneg_connected() || !s.nonpos_connected() || !s.zero_or_double_minus1()) continue;
        if (std::find(excluded.begin(), excluded.end(), s.k) != excluded.end()) continue;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Spectrum& a, const Spectrum& b) { return b < a; });
    return out;
}

std::pair<Int, Int> h1_formulas(const Int& c2, const Int& c3, const Int& h0_f_m1) {
    if ((c3 - c2) % 2 != 0) throw std::invalid_argument("h1_formulas: requires c3 == c2 (mod 2)");
    Int h1m2 = (5 * (c2 - 8) - c3) / 2;
    Int h1m1 = (7 * (c2 - 10) - c3) / 2 + h0_f_m1;
    return {h1m2, h1m1};
}

Int h0fm1_bound_c2_11(const Int& c3) {
    if (c3 % 2 == 0) throw std::invalid_argument("h0fm1_bound_c2_11: c3 must be odd for c2 = 11");
    Int half = (c3 - 7) / 2;
    return std::max(half, Int(1));
}

bool bml_bound(const Int& a, const Int& b, const Int& c, const Int& r) {
    if (r < 1 || r > std::min(b, c)) throw std::invalid_argument("bml_bound: requires 1 <= r <= min(b, c)");
    return a <= (b - r + 1) * (c - r + 1);
}

long koszul_gg_threshold(int n, std::vector<long> degrees) {
    if (static_cast<int>(degrees.size()) != n + 1)
        throw std::invalid_argument("koszul_gg_threshold: expected n + 1 degrees");
    for (long d : degrees)
        if (d <= 0) throw std::invalid_argument("koszul_gg_threshold: degrees must be positive");
    std::sort(degrees.begin(), degrees.end());
    return degrees[degrees.size() - 2] + degrees[degrees.size() - 1];
}

bool koszul_gg(int n, std::vector<long> degrees, long l) {
    return l >= koszul_gg_threshold(n, std::move(degrees));
}

CohomologyTable::CohomologyTable(int n_, long lmin, long lmax) : n(n_), l_min(lmin), l_max(lmax) {
    if (lmax < lmin) throw std::invalid_argument("CohomologyTable: empty window");
    dims.assign(static_cast<std::size_t>(lmax - lmin + 1),
                std::vector<std::optional<Int>>(static_cast<std::size_t>(n_) + 1));
}

std::optional<Int>& CohomologyTable::at(long l, int q) {
    if (l < l_min || l > l_max || q < 0 || q > n) throw std::out_of_range("CohomologyTable::at");
    return dims[static_cast<std::size_t>(l - l_min)][static_cast<std::size_t>(q)];
}

const std::optional<Int>& CohomologyTable::at(long l, int q) const {
    if (l < l_min || l > l_max || q < 0 || q > n) throw std::out_of_range("CohomologyTable::at");
    return dims[static_cast<std::size_t>(l - l_min)][static_cast<std::size_t>(q)];
}

bool CohomologyTable::fully_determined(long l) const {
    for (int q = 0; q <= n; ++q)
        if (!at(l, q)) return false;
    return true;
}

Int CohomologyTable::chi(long l) const {
    Int s = 0;
    for (int q = 0; q <= n; ++q) {
        if (!at(l, q)) throw std::domain_error("CohomologyTable::chi: undetermined entry");
        s += (q % 2 == 0) ? *at(l, q) : -*at(l, q);
    }
    return s;
}

} // namespace pnb
