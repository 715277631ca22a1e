#include "pnb/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pnb {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

void check_same_space(const Multivector& a, const Multivector& b, const char* op) {
    if (a.dim_v() != b.dim_v())
        throw std::invalid_argument(std::string(op) + ": mismatched dimV");
    if (a.covariant() != b.covariant())
        throw std::invalid_argument(std::string(op) + ": mixed covariant/contravariant operands");
}

} // namespace

Multivector::Multivector(int dimV, int grade, bool covariant)
    : dim_v_(dimV), grade_(grade), covariant_(covariant) {
    if (dimV < 1 || dimV > 31) throw std::invalid_argument("Multivector: dimV out of range");
    if (grade < 0 || grade > dimV) throw std::invalid_argument("Multivector: grade out of range");
}

void Multivector::set(std::uint32_t mask, const Rat& value) {
    if (popcount(mask) != grade_ || mask >= (1u << dim_v_))
        throw std::invalid_argument("Multivector::set: index set does not match grade/dimV");
    if (value == 0)
        coeffs_.erase(mask);
    else
        coeffs_[mask] = value;
}

Rat Multivector::coeff(std::uint32_t mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

Multivector Multivector::basis(int dimV, std::uint32_t mask, bool covariant) {
    Multivector m(dimV, popcount(mask), covariant);
    m.set(mask, 1);
    return m;
}

Multivector Multivector::scalar_unit(int dimV, bool covariant) {
    Multivector m(dimV, 0, covariant);
    m.set(0, 1);
    return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    check_same_space(*this, o, "add");
    if (grade_ != o.grade_) throw std::invalid_argument("add: mismatched grade");
    for (const auto& [m, c] : o.coeffs_) set(m, coeff(m) + c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector Multivector::operator+(const Multivector& o) const {
    Multivector r = *this;
    r += o;
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
    Multivector r = *this;
    r -= o;
    return r;
}

Multivector Multivector::operator-() const { return *this * Rat(-1); }

Multivector Multivector::operator*(const Rat& s) const {
    Multivector r(dim_v_, grade_, covariant_);
    if (s == 0) return r;
    for (const auto& [m, c] : coeffs_) r.coeffs_[m] = c * s;
    return r;
}

bool Multivector::operator==(const Multivector& o) const {
    return dim_v_ == o.dim_v_ && grade_ == o.grade_ && covariant_ == o.covariant_ && coeffs_ == o.coeffs_;
}

std::vector<Rat> Multivector::dense(const std::vector<std::uint32_t>& basis_masks) const {
    std::vector<Rat> v(basis_masks.size(), Rat(0));
    for (std::size_t i = 0; i < basis_masks.size(); ++i) v[i] = coeff(basis_masks[i]);
    return v;
}

std::string Multivector::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || grade_ == 0)
            out << pnb::to_string(a) << (grade_ == 0 ? "" : " ");
        if (grade_ > 0) {
            bool sep = false;
            for (int i = 0; i < 32; ++i) {
                if (!(m & (1u << i))) continue;
                out << (sep ? "^" : "") << (covariant_ ? "e*" : "e") << i;
                sep = true;
            }
        }
    }
    return out.str();
}

std::vector<std::uint32_t> lambda_basis(int dimV, int p) {
    std::vector<std::uint32_t> out;
    if (p < 0 || p > dimV) return out;
    std::vector<int> idx(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i : idx) m |= (1u << i);
        out.push_back(m);
        if (p == 0) break;
        int k = p - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == dimV - p + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < p; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

int merge_sign(std::uint32_t maskI, std::uint32_t maskJ) {
    if (maskI & maskJ) return 0;
    int inversions = 0;
    for (std::uint32_t j = maskJ; j != 0; j &= j - 1) {
        int bit = std::countr_zero(j);
        inversions += popcount(maskI >> (bit + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

std::string mask_to_string(std::uint32_t mask, bool covariant) {
    if (mask == 0) return "1";
    std::ostringstream out;
    out << (covariant ? "e*" : "e");
    bool sep = false;
    for (int i = 0; i < 32; ++i) {
        if (!(mask & (1u << i))) continue;
        if (sep && i >= 10) out << ",";
        out << i;
        sep = true;
    }
    return out.str();
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    check_same_space(a, b, "wedge");
    int g = a.grade() + b.grade();
    if (g > a.dim_v()) return Multivector(a.dim_v(), a.dim_v(), a.covariant()); // zero
    Multivector r(a.dim_v(), g, a.covariant());
    for (const auto& [mi, ci] : a.coeffs())
        for (const auto& [mj, cj] : b.coeffs()) {
            int s = merge_sign(mi, mj);
            if (s == 0) continue;
            std::uint32_t m = mi | mj;
            r.set(m, r.coeff(m) + Rat(s) * ci * cj);
        }
    return r;
}

Rat pairing(const Multivector& alpha, const Multivector& eta) {
    if (alpha.dim_v() != eta.dim_v()) throw std::invalid_argument("pairing: mismatched dimV");
    if (!alpha.covariant() || eta.covariant())
        throw std::invalid_argument("pairing: expects covariant first argument, contravariant second");
    if (alpha.grade() != eta.grade()) throw std::invalid_argument("pairing: mismatched grade");
    Rat s = 0;
    for (const auto& [m, c] : alpha.coeffs()) s += c * eta.coeff(m);
    return s;
}

Multivector contract(const Multivector& alpha, const Multivector& omega) {
    if (alpha.dim_v() != omega.dim_v()) throw std::invalid_argument("contract: mismatched dimV");
    if (!alpha.covariant() || omega.covariant())
        throw std::invalid_argument("contract: alpha must be covariant, omega contravariant");
    if (alpha.grade() < omega.grade()) throw std::invalid_argument("contract: grade underflow");
    // <e*_K . e_I, e_J> = <e*_K, e_I ^ e_J> forces e*_K . e_I = sign(I, K\I) e*_{K\I}.
    Multivector r(alpha.dim_v(), alpha.grade() - omega.grade(), true);
    for (const auto& [mk, ck] : alpha.coeffs())
        for (const auto& [mi, ci] : omega.coeffs()) {
            if ((mi & mk) != mi) continue;
            std::uint32_t mj = mk & ~mi;
            int s = merge_sign(mi, mj);
            r.set(mj, r.coeff(mj) + Rat(s) * ck * ci);
        }
    return r;
}

Multivector parse_multivector(const std::string& text, int dimV, bool covariant) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_uint = [&]() -> Int {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("multivector parse: expected digits at position " + std::to_string(start));
        return Int(text.substr(start, pos - start));
    };

    struct Term {
        int factors = 0;
        Multivector value;
    };
    std::vector<Term> terms;

    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("multivector parse: empty input");
    bool negative = false;
    bool expect_term = true;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (expect_term && !terms.empty())
                throw std::invalid_argument("multivector parse: consecutive signs");
            negative = (ch == '-') ? !negative : negative;
            ++pos;
            expect_term = true;
            continue;
        }
        if (!expect_term && !terms.empty())
            throw std::invalid_argument("multivector parse: missing '+' or '-' between terms");
        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Int num = parse_uint();
            Int den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                den = parse_uint();
                if (den == 0) throw std::invalid_argument("multivector parse: zero denominator");
            }
            coeff = make_rat(num, den);
            have_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        Term t{0, Multivector::scalar_unit(dimV, covariant)};
        while (pos < text.size() && text[pos] == 'e') {
            ++pos;
            if (pos < text.size() && text[pos] == '*') ++pos; // accept the dual-basis marker
            Int iv = parse_uint();
            long i = iv.get_si();
            if (i < 0 || i >= dimV)
                throw std::invalid_argument("multivector parse: basis index out of range for dimV");
            t.value = wedge(t.value, Multivector::basis(dimV, 1u << i, covariant));
            ++t.factors;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                if (pos == text.size() || text[pos] != 'e')
                    throw std::invalid_argument("multivector parse: expected basis vector after '^'");
            } else {
                break;
            }
        }
        if (!have_coeff && t.factors == 0)
            throw std::invalid_argument("multivector parse: unexpected character '" + std::string(1, ch) + "'");
        t.value = t.value * (negative ? -coeff : coeff);
        terms.push_back(std::move(t));
        negative = false;
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("multivector parse: dangling sign");

    int grade = -1;
    for (const Term& t : terms)
        if (!t.value.is_zero()) {
            if (grade == -1) grade = t.factors;
            else if (grade != t.factors)
                throw std::invalid_argument("multivector parse: mixed grades in one multivector");
        }
    if (grade == -1) grade = terms.front().factors;
    Multivector r(dimV, grade, covariant);
    for (const Term& t : terms)
        if (!t.value.is_zero()) r += t.value;
    return r;
}

namespace {

// omega(x, y) for the skew form of a grade-2 multivector, with x, y dense
// coordinate vectors.
Rat skew_form(const Multivector& omega, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s = 0;
    for (const auto& [m, c] : omega.coeffs()) {
        int i = std::countr_zero(m);
        int j = std::countr_zero(m & (m - 1));
        // mask bits: i < j
        s += c * (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] -
                  x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)]);
    }
    return s;
}

Multivector vector_from_dense(int dimV, const std::vector<Rat>& x, bool covariant) {
    Multivector v(dimV, 1, covariant);
    for (int i = 0; i < dimV; ++i) v.set(1u << i, x[static_cast<std::size_t>(i)]);
    return v;
}

} // namespace

long skew_rank(const Multivector& omega) {
    if (omega.grade() != 2) throw std::invalid_argument("skew_rank: grade must be 2");
    const int n = omega.dim_v();
    QMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [m, c] : omega.coeffs()) {
        int i = std::countr_zero(m);
        int j = std::countr_zero(m & (m - 1));
        a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
        a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -c;
    }
    return a.rank();
}

SkewNormalForm skew_normal_form(const Multivector& omega) {
    if (omega.grade() != 2) throw std::invalid_argument("skew_normal_form: grade must be 2");
    const int n = omega.dim_v();
    std::vector<std::vector<Rat>> pool;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(static_cast<std::size_t>(n), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        pool.push_back(std::move(e));
    }
    std::vector<std::vector<Rat>> paired;
    while (true) {
        std::size_t pi = pool.size(), pj = pool.size();
        for (std::size_t i = 0; i < pool.size() && pi == pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                if (skew_form(omega, pool[i], pool[j]) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == pool.size()) break;
        std::vector<Rat> u = pool[pi];
        Rat scale = skew_form(omega, u, pool[pj]);
        std::vector<Rat> w = pool[pj];
        for (Rat& x : w) x /= scale;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pj));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto& b : pool) {
            Rat fu = skew_form(omega, u, b);
            Rat fw = skew_form(omega, w, b);
            for (int k = 0; k < n; ++k) {
                std::size_t kk = static_cast<std::size_t>(k);
                b[kk] += -fu * w[kk] + fw * u[kk];
            }
        }
        paired.push_back(std::move(u));
        paired.push_back(std::move(w));
    }
    // The Gram-Schmidt columns P satisfy P^T A P = J; the wedge decomposition
    // omega = sum v_{2i} ^ v_{2i+1} needs A = V J V^T, i.e. V = (P^T)^{-1}.
    QMatrix pt(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::size_t col = 0;
    for (const auto& v : paired) {
        for (int i = 0; i < n; ++i) pt.at(col, static_cast<std::size_t>(i)) = v[static_cast<std::size_t>(i)];
        ++col;
    }
    for (const auto& v : pool) {
        for (int i = 0; i < n; ++i) pt.at(col, static_cast<std::size_t>(i)) = v[static_cast<std::size_t>(i)];
        ++col;
    }
    QMatrix vmat = pt.inverse();
    SkewNormalForm f;
    f.rank = static_cast<int>(paired.size());
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> column(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            column[static_cast<std::size_t>(i)] = vmat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        f.basis.push_back(vector_from_dense(n, column, omega.covariant()));
    }
    return f;
}

H0Matrix h0_matrix(const ContractionMorphismSpec& spec) {
    if (spec.dimV < 1) throw std::invalid_argument("h0_matrix: dimV must be >= 1");
    for (const auto& [p, t] : spec.source_terms)
        if (p != t || p < 0 || p >= spec.dimV)
            throw std::invalid_argument("h0_matrix: source terms must be Omega^p(p) with 0 <= p < dimV");
    for (const auto& [q, t] : spec.target_terms)
        if (q != t || q < 0 || q >= spec.dimV)
            throw std::invalid_argument("h0_matrix: target terms must be Omega^q(q) with 0 <= q < dimV");

    std::vector<std::vector<std::uint32_t>> src_basis, tgt_basis;
    std::vector<std::size_t> col_off(spec.source_terms.size() + 1, 0), row_off(spec.target_terms.size() + 1, 0);
    for (std::size_t i = 0; i < spec.source_terms.size(); ++i) {
        src_basis.push_back(lambda_basis(spec.dimV, spec.source_terms[i].first + 1));
        col_off[i + 1] = col_off[i] + src_basis.back().size();
    }
    for (std::size_t j = 0; j < spec.target_terms.size(); ++j) {
        tgt_basis.push_back(lambda_basis(spec.dimV, spec.target_terms[j].first + 1));
        row_off[j + 1] = row_off[j] + tgt_basis.back().size();
    }

    H0Matrix out;
    out.rows = row_off.back();
    out.cols = col_off.back();
    out.matrix.assign(out.rows, std::vector<Rat>(out.cols, Rat(0)));

    for (const auto& [key, omega] : spec.entries) {
        auto [j, i] = key;
        if (j < 0 || static_cast<std::size_t>(j) >= spec.target_terms.size() || i < 0 ||
            static_cast<std::size_t>(i) >= spec.source_terms.size())
            throw std::invalid_argument("h0_matrix: entry index out of range");
        int p = spec.source_terms[static_cast<std::size_t>(i)].first;
        int q = spec.target_terms[static_cast<std::size_t>(j)].first;
        if (p - q < 0 || omega.grade() != p - q || omega.dim_v() != spec.dimV || omega.covariant())
            throw std::invalid_argument("h0_matrix: entry grade must equal p_i - q_j >= 0, contravariant");
        Rat sgn = ((p - q) % 2 == 0) ? 1 : -1;
        const auto& sb = src_basis[static_cast<std::size_t>(i)];
        const auto& tb = tgt_basis[static_cast<std::size_t>(j)];
        for (std::size_t col = 0; col < sb.size(); ++col) {
            Multivector img = contract(Multivector::basis(spec.dimV, sb[col], true), omega);
            for (std::size_t row = 0; row < tb.size(); ++row) {
                Rat v = img.coeff(tb[row]) * sgn;
                if (v != 0)
                    out.matrix[row_off[static_cast<std::size_t>(j)] + row][col_off[static_cast<std::size_t>(i)] + col] += v;
            }
        }
    }

    for (std::size_t i = 0; i < spec.source_terms.size(); ++i)
        for (std::uint32_t m : src_basis[i])
            out.col_labels.push_back("s" + std::to_string(i) + ":" + mask_to_string(m, true));
    for (std::size_t j = 0; j < spec.target_terms.size(); ++j)
        for (std::uint32_t m : tgt_basis[j])
            out.row_labels.push_back("t" + std::to_string(j) + ":" + mask_to_string(m, true));

    QMatrix qm(out.rows, out.cols);
    for (std::size_t r = 0; r < out.rows; ++r)
        for (std::size_t c = 0; c < out.cols; ++c) qm.at(r, c) = out.matrix[r][c];
    out.rank = qm.rank();
    return out;
}

ContractionMorphismSpec make_horrocks_spec(const Multivector& omega) {
    if (omega.dim_v() != 6 || omega.grade() != 2)
        throw std::invalid_argument("make_horrocks_spec: needs a 2-vector with dimV = 6");
    ContractionMorphismSpec s;
    s.dimV = 6;
    s.source_terms = {{3, 3}};
    s.target_terms = {{1, 1}};
    s.entries[{0, 0}] = omega;
    return s;
}

ContractionMorphismSpec make_sasakura_spec(const Multivector& omega, const Multivector& v) {
    if (omega.dim_v() != 5 || omega.grade() != 2 || v.dim_v() != 5 || v.grade() != 1)
        throw std::invalid_argument("make_sasakura_spec: needs a 2-vector and a vector with dimV = 5");
    ContractionMorphismSpec s;
    s.dimV = 5;
    s.source_terms = {{3, 3}, {2, 2}};
    s.target_terms = {{1, 1}};
    s.entries[{0, 0}] = omega;
    s.entries[{0, 1}] = -v;
    return s;
}

bool horrocks_epi_check(const Multivector& omega) {
    if (omega.dim_v() != 6) throw std::invalid_argument("horrocks_epi_check: dimV must be 6");
    if (omega.grade() != 2) throw std::invalid_argument("horrocks_epi_check: grade must be 2");
    return skew_rank(omega) == 6;
}

bool sasakura_gg_check(const Multivector& omega, const Multivector& v) {
    if (omega.dim_v() != 5 || v.dim_v() != 5)
        throw std::invalid_argument("sasakura_gg_check: dimV must be 5");
    if (omega.grade() != 2 || v.grade() != 1)
        throw std::invalid_argument("sasakura_gg_check: omega must have grade 2 and v grade 1");
    if (v.is_zero()) throw std::invalid_argument("sasakura_gg_check: v = 0");
    if (skew_rank(omega) != 4) return false;
    // v lies in the support of omega iff v ^ omega ^ omega = 0 (dimV = 5).
    return !wedge(wedge(omega, omega), v).is_zero();
}

bool horrocks_ker_gg_check(const Multivector& omega) {
    if (omega.dim_v() != 6) throw std::invalid_argument("horrocks_ker_gg_check: dimV must be 6");
    if (omega.grade() != 2) throw std::invalid_argument("horrocks_ker_gg_check: grade must be 2");
    long r = skew_rank(omega);
    if (r < 4)
        throw std::domain_error("horrocks_ker_gg_check: omega does not define an epimorphism (skew rank < 4)");
    return r == 6;
}

namespace {

using Poly = std::vector<Rat>; // little-endian coefficients

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
        if (a.size() >= b.size() && !a.empty() && a.back() == 0) poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    Int num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rat(rn, rd);
}

// Decides whether some A + sB (or B itself) is decomposable, A and B
// linearly independent 2-vectors. The components of (A+sB)^(A+sB) are
// quadratics in s; a common root over the algebraic closure is detected by
// a univariate gcd.
DecompResult pencil_decide(const Multivector& A, const Multivector& B) {
    DecompResult res;
    Multivector AA = wedge(A, A), AB = wedge(A, B), BB = wedge(B, B);
    if (BB.is_zero()) {
        res.status = DecompStatus::Found;
        res.witness = DecomposableWitness{B, std::nullopt, {}};
        return res;
    }
    std::vector<Poly> comps;
    for (std::uint32_t m : lambda_basis(A.dim_v(), 4)) {
        Poly q = {AA.coeff(m), 2 * AB.coeff(m), BB.coeff(m)};
        poly_trim(q);
        if (!q.empty()) comps.push_back(std::move(q));
    }
    if (comps.empty()) {
        // every member of the pencil squares to zero
        res.status = DecompStatus::Found;
        res.witness = DecomposableWitness{A, std::nullopt, {}};
        return res;
    }
    Poly g = comps[0];
    for (std::size_t i = 1; i < comps.size() && g.size() > 1; ++i) g = poly_gcd(g, comps[i]);
    if (g.size() <= 1) {
        res.status = DecompStatus::None;
        return res;
    }
    Rat lead = g.back();
    for (Rat& coeff : g) coeff /= lead; // monic
    if (g.size() == 2) {
        Rat s0 = -g[0]; // s + g[0]
        res.status = DecompStatus::Found;
        res.witness = DecomposableWitness{A + B * s0, std::nullopt, {}};
        return res;
    }
    // monic quadratic s^2 + b s + c
    Rat b = g[1], c = g[0];
    Rat disc = b * b - 4 * c;
    if (auto sq = rational_sqrt(disc)) {
        Rat s0 = (-b + *sq) / 2;
        res.status = DecompStatus::Found;
        res.witness = DecomposableWitness{A + B * s0, std::nullopt, {}};
        return res;
    }
    res.status = DecompStatus::Found;
    res.witness = DecomposableWitness{A, B, {c, b, Rat(1)}};
    return res;
}

std::vector<Multivector> span_basis(const std::vector<Multivector>& span) {
    if (span.empty()) throw std::invalid_argument("decomposable_in_subspace: zero-dimensional span");
    const int dimV = span.front().dim_v();
    const bool cov = span.front().covariant();
    for (const auto& w : span)
        if (w.dim_v() != dimV || w.grade() != 2 || w.covariant() != cov)
            throw std::invalid_argument("decomposable_in_subspace: span elements must be 2-vectors in one space");
    auto masks = lambda_basis(dimV, 2);
    std::vector<std::vector<Rat>> rows;
    for (const auto& w : span) rows.push_back(w.dense(masks));
    // row echelon, keep the nonzero rows
    std::size_t r = 0;
    for (std::size_t c = 0; c < masks.size() && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Rat lead = rows[r][c];
        for (auto& x : rows[r]) x /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = 0; j < masks.size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    std::vector<Multivector> basis;
    for (std::size_t i = 0; i < r; ++i) {
        Multivector w(dimV, 2, cov);
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (rows[i][j] != 0) w.set(masks[j], rows[i][j]);
        basis.push_back(std::move(w));
    }
    if (basis.empty()) throw std::invalid_argument("decomposable_in_subspace: zero-dimensional span");
    return basis;
}

} // namespace

bool verify_decomposable(const DecomposableWitness& w) {
    if (!w.extension) {
        if (w.primary.is_zero()) return false;
        return wedge(w.primary, w.primary).is_zero();
    }
    if (w.minpoly.size() != 3 || w.minpoly[2] != 1) return false;
    const Rat& c = w.minpoly[0];
    const Rat& b = w.minpoly[1];
    // (P + th Q)^2 with th^2 = -b th - c
    Multivector PP = wedge(w.primary, w.primary);
    Multivector PQ = wedge(w.primary, *w.extension);
    Multivector QQ = wedge(*w.extension, *w.extension);
    Multivector part0 = PP - QQ * c;
    Multivector part1 = PQ * Rat(2) - QQ * b;
    return part0.is_zero() && part1.is_zero() && !(w.primary.is_zero() && w.extension->is_zero());
}

DecompResult decomposable_in_subspace(const std::vector<Multivector>& span) {
    std::vector<Multivector> basis = span_basis(span);
    const std::size_t d = basis.size();

    if (d == 1) {
        DecompResult res;
        if (wedge(basis[0], basis[0]).is_zero()) {
            res.status = DecompStatus::Found;
            res.witness = DecomposableWitness{basis[0], std::nullopt, {}};
        }
        return res;
    }
    if (d == 2) return pencil_decide(basis[0], basis[1]);

    // dim >= 3: heuristic only. Any witness found is genuine; None is never
    // reported.
    for (const auto& g : basis)
        if (wedge(g, g).is_zero())
            return {DecompStatus::Found, DecomposableWitness{g, std::nullopt, {}}};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            DecompResult r = pencil_decide(basis[i], basis[j]);
            if (r.status == DecompStatus::Found) return r;
        }
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 64; ++trial) {
        Multivector A(basis[0].dim_v(), 2, basis[0].covariant());
        Multivector B = A;
        for (const auto& g : basis) {
            A += g * Rat(coeff(rng));
            B += g * Rat(coeff(rng));
        }
        if (A.is_zero() || B.is_zero()) continue;
        DecompResult r = pencil_decide(A, B);
        if (r.status == DecompStatus::Found && r.witness && verify_decomposable(*r.witness)) return r;
    }
    return {DecompStatus::Undecided, std::nullopt};
}

GgResult gg_omega12_check(const std::vector<Multivector>& w_covariant) {
    if (w_covariant.empty()) throw std::invalid_argument("gg_omega12_check: empty W");
    const int dimV = w_covariant.front().dim_v();
    for (const auto& a : w_covariant)
        if (a.dim_v() != dimV || a.grade() != 2 || !a.covariant())
            throw std::invalid_argument("gg_omega12_check: W must consist of covariant 2-vectors");
    auto masks = lambda_basis(dimV, 2);
    QMatrix m(w_covariant.size(), masks.size());
    for (std::size_t r = 0; r < w_covariant.size(); ++r) {
        auto row = w_covariant[r].dense(masks);
        for (std::size_t c = 0; c < masks.size(); ++c) m.at(r, c) = row[c];
    }
    auto null_basis = m.nullspace();

    GgResult res;
    res.perp_dim = static_cast<int>(null_basis.size());
    if (null_basis.empty()) {
        res.status = GgStatus::Yes;
        return res;
    }
    std::vector<Multivector> perp;
    for (const auto& v : null_basis) {
        Multivector w(dimV, 2, false);
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (v[j] != 0) w.set(masks[j], v[j]);
        perp.push_back(std::move(w));
    }
    DecompResult d = decomposable_in_subspace(perp);
    switch (d.status) {
        case DecompStatus::Found:
            res.status = GgStatus::No;
            res.witness = d.witness;
            break;
        case DecompStatus::None:
            res.status = GgStatus::Yes;
            break;
        case DecompStatus::Undecided:
            res.status = GgStatus::Undecided;
            break;
    }
    return res;
}

} // namespace pnb
