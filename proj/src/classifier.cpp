#include "pnb/classifier.hpp"

#include "pnb/exterior.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pnb {

namespace {

// Lambda^{N-k}V -> Lambda^k V^dual through the wedge pairing into Lambda^N V.
Multivector complement_covariant(const Multivector& w) {
    const int N = w.dim_v();
    const std::uint32_t full = (1u << N) - 1;
    Multivector out(N, N - w.grade(), true);
    for (const auto& [m, c] : w.coeffs()) {
        std::uint32_t comp = full & ~m;
        int s = merge_sign(m, comp);
        out.set(comp, out.coeff(comp) + Rat(s) * c);
    }
    return out;
}

Multivector random_vector(int dimV, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    while (true) {
        Multivector v(dimV, 1, false);
        for (int i = 0; i < dimV; ++i) v.set(1u << i, Rat(coeff(rng)));
        if (!v.is_zero()) return v;
    }
}

// Random 2-vector of exact skew rank 2k, built from a random basis.
Multivector random_two_vector_of_rank(int dimV, int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    while (true) {
        QMatrix m(static_cast<std::size_t>(dimV), static_cast<std::size_t>(dimV));
        std::vector<Multivector> cols;
        for (int j = 0; j < dimV; ++j) {
            Multivector v(dimV, 1, false);
            for (int i = 0; i < dimV; ++i) {
                Rat c(coeff(rng));
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
                v.set(1u << i, c);
            }
            cols.push_back(std::move(v));
        }
        if (m.rank() != dimV) continue;
        Multivector omega(dimV, 2, false);
        for (int i = 0; i < k; ++i)
            omega += wedge(cols[static_cast<std::size_t>(2 * i)], cols[static_cast<std::size_t>(2 * i + 1)]);
        if (skew_rank(omega) == 2 * k) return omega;
    }
}

struct CertOutcome {
    int found = 0, undecided = 0, failed = 0;
    bool certified() const { return failed == 0 && found > 0; }
};

// Certificate behind the c3 = c2 = 11 exclusion: for a morphism
// Om^3(3) -> 2 Om^1(1) on P^4 given by a pair of 2-vectors, the perp of
// W = omega ^ V + omega' ^ V always contains a decomposable element, so the
// dual map is never an epimorphism. Checked on random generic instances.
CertOutcome certify_omega_pair_not_split(int trials) {
    std::mt19937 rng(2024);
    CertOutcome out;
    for (int t = 0; t < trials; ++t) {
        Multivector omega = random_two_vector_of_rank(5, 2, rng);
        Multivector omega2 = random_two_vector_of_rank(5, 2, rng);
        std::vector<Multivector> w_cov;
        for (int i = 0; i < 5; ++i) {
            Multivector ei = Multivector::basis(5, 1u << i, false);
            Multivector a = wedge(omega, ei), b = wedge(omega2, ei);
            if (!a.is_zero()) w_cov.push_back(complement_covariant(a));
            if (!b.is_zero()) w_cov.push_back(complement_covariant(b));
        }
        GgResult g = gg_omega12_check(w_cov);
        if (g.status == GgStatus::No && g.witness && verify_decomposable(*g.witness))
            ++out.found;
        else if (g.status == GgStatus::Undecided)
            ++out.undecided;
        else
            ++out.failed;
    }
    return out;
}

// Certificate behind the (0,-1,-2)-spectrum elimination at (c2, c3) = (11, 13):
// a morphism Om^3(3) -> 3O + Om^2(2) on P^4 (three 3-vectors and a vector)
// never dualizes to an epimorphism.
CertOutcome certify_claim2_not_split(int trials) {
    std::mt19937 rng(4096);
    std::uniform_int_distribution<int> coeff(-2, 2);
    CertOutcome out;
    for (int t = 0; t < trials; ++t) {
        Multivector v0 = random_vector(5, rng);
        std::vector<Multivector> w_cov;
        for (std::uint32_t m : lambda_basis(5, 2)) {
            Multivector w = wedge(v0, Multivector::basis(5, m, false));
            if (!w.is_zero()) w_cov.push_back(complement_covariant(w));
        }
        for (int i = 0; i < 3; ++i) {
            Multivector om(5, 3, false);
            for (std::uint32_t m : lambda_basis(5, 3)) om.set(m, Rat(coeff(rng)));
            if (!om.is_zero()) w_cov.push_back(complement_covariant(om));
        }
        GgResult g = gg_omega12_check(w_cov);
        if (g.status == GgStatus::No && g.witness && verify_decomposable(*g.witness))
            ++out.found;
        else if (g.status == GgStatus::Undecided)
            ++out.undecided;
        else
            ++out.failed;
    }
    return out;
}

std::string spectra_to_string(const std::vector<Spectrum>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i].to_string();
    return s.str();
}

} // namespace

std::optional<std::vector<long>> c2_12_c3_rule(const Int& h0_f_m1) {
    if (h0_f_m1 >= 2) return std::vector<long>{16, 18, 20};
    return std::nullopt;
}

C3Is16Companion c2_12_c3_16_companion() { return {}; }

Int liaison_chi(const Int& a, const Int& b, const Int& deg_y, const Int& deg_y2) {
    if (deg_y + deg_y2 != a * b)
        throw std::invalid_argument("liaison_chi: deg Y + deg Y' must equal a*b");
    Int num = (a + b - 4) * (deg_y - deg_y2);
    if (num % 2 != 0) throw std::logic_error("liaison_chi: non-integral value");
    return num / 2;
}

bool LiaisonData::consistent() const {
    if (deg_y + deg_y2 != a * b) return false;
    if (chi_y && chi_y2) return *chi_y2 - *chi_y == liaison_chi(a, b, deg_y, deg_y2);
    return true;
}

Int LiaisonData::chi_diff() const { return liaison_chi(a, b, deg_y, deg_y2); }

Int c3_bookkeeping(const Int& chi_y) { return -12 - 2 * chi_y; }

Int g_c3_bookkeeping(const Int& chi_y2) { return 4 - 2 * chi_y2; }

std::pair<Int, Int> c3_bookkeeping_pair(const Int& chi_y, const Int& chi_y2) {
    Int c3 = c3_bookkeeping(chi_y);
    Int c3g = g_c3_bookkeeping(chi_y2);
    if (c3 != c3g + 16)
        throw std::invalid_argument("c3_bookkeeping_pair: inconsistent pair, c3 != c3(G) + 16");
    return {c3, c3g};
}

std::vector<UnstableCase> fprimunstable_table() {
    std::vector<UnstableCase> cases;

    auto chern_line = [](int n, long a) { return chern_twist(ChernVector::trivial(n, 1), a); };

    {
        UnstableCase c;
        c.case_no = 1;
        c.rank = 3;
        c.extension = "0 -> M(2) -> F -> O(1) -> 0, M an instanton of charge c2 - 8";
        for (long c2 = 10; c2 <= 12; ++c2) {
            ChernVector m(3, 2, {Int(0), Int(c2 - 8), Int(0)});
            ChernVector f = chern_mul(chern_twist(m, 2), chern_line(3, 1));
            UnstableCase::Instance inst{Int(c2), Int(c2 - 4), Int(c2 - 8), f, ""};
            c.instances.push_back(std::move(inst));
        }
        cases.push_back(std::move(c));
    }
    {
        UnstableCase c;
        c.case_no = 2;
        c.rank = 4;
        c.extension = "F = O(1) + ker(4O(2) -> O(4))";
        ChernVector ker = ChernVector::trivial(3, 0);
        for (int i = 0; i < 4; ++i) ker = chern_mul(ker, chern_line(3, 2));
        ker = chern_mul(ker, chern_inv(chern_line(3, 4)));
        ChernVector f = chern_mul(ker, chern_line(3, 1));
        c.instances.push_back({Int(12), Int(8), Int(4), f, "koszul kernel"});
        cases.push_back(std::move(c));
    }
    {
        UnstableCase c;
        c.case_no = 3;
        c.rank = 5;
        c.extension = "0 -> M(2) -> F -> T(-1) -> 0, c2(M) = c2 - 9";
        ChernVector t_m1 = expr_chern(BundleExpr::tangent_twist(), 3);
        for (long c2 = 10; c2 <= 12; ++c2) {
            ChernVector m(3, 2, {Int(0), Int(c2 - 9), Int(0)});
            ChernVector f = chern_mul(chern_twist(m, 2), t_m1);
            UnstableCase::Instance inst{Int(c2), Int(c2), Int(c2 - 9), f,
                                        c2 == 10 ? "M is a nullcorrelation bundle" : ""};
            c.instances.push_back(std::move(inst));
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

std::vector<Spectrum> cited_spectrum_exclusions() { return {Spectrum({1, 1, 0, -1})}; }

namespace {

struct C3Candidate {
    std::vector<std::string> trace;
    std::vector<Spectrum> spectra;
};

} // namespace

FilterResult filter_chern(int n, const ClassifierOptions& opts) {
    if (n != 4) throw std::invalid_argument("filter_chern: only the P^4 driver is implemented (n = 4)");
    FilterResult out;
    const auto catalog = named_bundle_catalog(4);

    const std::vector<std::string> assumptions = {
        "H^i(E^dual) = 0 for i = 0, 1 (not verified here)",
        "c2 <= 12 after the P-functor reduction",
        "H^0(E_H(-2)) = 0 for every hyperplane H",
    };

    std::optional<CertOutcome> cert_pair, cert_claim2;
    if (opts.cited_rules && opts.mechanized_certificates) {
        cert_pair = certify_omega_pair_not_split(8);
        cert_claim2 = certify_claim2_not_split(8);
        if (cert_pair->failed > 0 || cert_claim2->failed > 0)
            throw std::logic_error("filter_chern: a decomposability certificate failed (regression)");
    }

    for (long c2 = std::max(9, opts.c2_min); c2 <= std::min(12, opts.c2_max); ++c2) {
        const int m = static_cast<int>(c2) - 8;
        std::map<long, C3Candidate> candidates;

        // stable route: spectra of the normalized rank-3 quotient
        for (long c3 = c2 - 4; c3 <= c2 - 4 + 4 * m; c3 += 2) {
            long c3g = c3 - 2 * c2 + 12;
            auto spectra = enumerate_spectra(m, c3g, SpectrumOptions{/*k1_nonpositive=*/true});
            if (spectra.empty()) continue;
            auto& cand = candidates[c3];
            cand.spectra = spectra;
            cand.trace.push_back("spectrum-admissible " + spectra_to_string(spectra));
        }
        // unstable routes
        candidates[c2 - 4].trace.push_back("unstable-instanton-extension (c3 = c2 - 4)");
        if (c2 == 12)
            candidates[c2 - 4].trace.push_back("unstable-koszul-kernel (c2 = 12, c3 = 8)");
        candidates[c2].trace.push_back("unstable-tangent-extension (c3 = c2)");

        for (auto& [c3, cand] : candidates) {
            cand.trace.push_back("parity: c3 == c2 (mod 2)");

            if (opts.cited_rules && c2 < 10) {
                out.exclusions.push_back({Int(c2), Int(c3), "excluded[cited]: c2 >= 10"});
                continue;
            }
            if (opts.cited_rules && c3 < c2) {
                out.exclusions.push_back({Int(c2), Int(c3), "excluded[cited]: c3 >= c2"});
                continue;
            }
            if (opts.cited_rules && c3 == c2 && c2 == 10) {
                // survives: the 5O(1) case
            }
            if (opts.cited_rules && c3 == c2 && (c2 == 11 || c2 == 12)) {
                std::string rule = "excluded[cited]: c3 = c2 = " + std::to_string(c2);
                if (c2 == 11 && cert_pair)
                    rule += " (mechanized: perp of the omega-pair subspace met the decomposable cone in " +
                            std::to_string(cert_pair->found) + "/" + std::to_string(cert_pair->found + cert_pair->undecided) +
                            " generic instances)";
                out.exclusions.push_back({Int(c2), Int(c3), rule});
                continue;
            }
            if (opts.cited_rules && c2 == 12 && c3 == 14) {
                // multiplication H^1(E(-2)) -> H^1(E(-1)) has corank <= 1 on a
                // 2- or 3-dimensional space; no 5-dimensional family of such
                // maps exists.
                bool bml_kills = !bml_bound(5, 2, 2, 1) && !bml_bound(5, 3, 3, 2);
                std::string rule = "excluded[cited]: (c2, c3) = (12, 14)";
                if (bml_kills) rule += " (mechanized: bilinear-map corank bound)";
                out.exclusions.push_back({Int(c2), Int(c3), rule});
                continue;
            }

            // c4 determination
            std::vector<const CatalogEntry*> ids;
            for (const auto& e : catalog)
                if (e.chern.c_at(1) == 5 && e.chern.c_at(2) == c2 && e.chern.c_at(3) == c3)
                    ids.push_back(&e);

            if (c2 == 11 && c3 == 13 && opts.cited_rules) {
                std::string rule =
                    "spectrum-branch-eliminated[cited]: (0,-1,-2) (no split mono into 3O + Om(2,2)";
                if (cert_claim2)
                    rule += "; mechanized witness found in " + std::to_string(cert_claim2->found) + "/" +
                            std::to_string(cert_claim2->found + cert_claim2->undecided) + " instances";
                rule += ")";
                cand.trace.push_back(rule);
            }

            if (ids.empty()) {
                // only reachable with cited rules disabled: report the minimal
                // arithmetically admissible c4
                for (long c4 = 0; c4 <= 64; ++c4) {
                    ChernVector c(4, 0, {Int(5), Int(c2), Int(c3), Int(c4)});
                    auto rf = rank_formula(c2, c3, c4, 0);
                    if (schwarzenberger(c) && rf.integral && rf.value >= 0) {
                        CandidateRecord rec;
                        rec.chern = c;
                        rec.rank = to_int(rf.value);
                        rec.construction_tags = {"(unidentified; minimal arithmetic c4)"};
                        rec.rule_trace = cand.trace;
                        rec.rule_trace.push_back("c4 minimal arithmetic solution (no construction known)");
                        rec.assumptions = assumptions;
                        out.records.push_back(std::move(rec));
                        break;
                    }
                }
                continue;
            }

            // arithmetic cross-pinning where the classification pins c4
            std::vector<std::string> pin_trace;
            if (c2 == 10 && c3 == 10) {
                // h^1(E_H(-2)) = 0 forces h^1(E(-3)) = 0, so rr = h^2(E(-3)) >= 0
                auto [h1m2, h1m1] = h1_formulas(c2, c3, 0);
                bool vanish = !bml_bound(5, 1, 1 + h1m2, 1);
                std::vector<long> pinned;
                for (long c4 = 0; c4 <= 64; ++c4) {
                    Rat rr = rr_h2_minus_h1(c2, c3, c4);
                    ChernVector c(4, 0, {Int(5), Int(c2), Int(c3), Int(c4)});
                    if (is_integral(rr) && rr >= 0 && schwarzenberger(c)) pinned.push_back(c4);
                }
                if (vanish && pinned.size() == 1)
                    pin_trace.push_back("c4 = " + std::to_string(pinned[0]) +
                                        " pinned: h1(E(-3)) = 0 [bilinear-map bound, h1(E_H(-2)) = " +
                                        to_string(h1m2) + "], rr_h2_minus_h1 = h2(E(-3)) in Z>=0");
            }
            if (c2 == 12 && c3 == 16) {
                // h1(E(-2)) + h2(E(-3)) = h1(E_H(-2)) = 2; h2 != 0 (cited);
                // h2 = 2 impossible: no 5-dim family k^5 -> Hom(k^2, k^2) of
                // corank <= 0 maps.
                auto [h1m2, h1m1] = h1_formulas(c2, c3, 0);
                bool h2_two_killed = !bml_bound(5, 2, 2, 2);
                if (h1m2 == 2 && h2_two_killed) {
                    Rat rr = rr_h2_minus_h1(c2, c3, 8);
                    if (rr == 1)
                        pin_trace.push_back(
                            "c4 = 8 pinned: h2(E(-3)) = 1 [h1(E_H(-2)) = 2, h2 != 0 cited, h2 = 2 excluded by "
                            "bilinear-map bound], rr_h2_minus_h1(12,16,8) = 1");
                }
            }
            if (c2 == 11 && c3 == 13) {
                Rat rr = rr_h2_minus_h1(c2, c3, 9);
                Int h2_branch = spectrum_h2(Spectrum({-1, -1, -1}), -1);
                if (rr == h2_branch)
                    pin_trace.push_back("c4 = 9 consistent: h2(E(-3)) = " + to_string(h2_branch) +
                                        " on the surviving (-1,-1,-1) branch");
            }

            // one record per distinct c4 among the identified constructions
            std::map<Int, std::vector<const CatalogEntry*>> by_c4;
            for (const auto* e : ids) by_c4[e->chern.c_at(4)].push_back(e);
            for (auto& [c4, entries] : by_c4) {
                CandidateRecord rec;
                rec.chern = ChernVector(4, entries.front()->rank, {Int(5), Int(c2), Int(c3), c4});
                rec.rank = entries.front()->rank;
                for (const auto* e : entries) {
                    rec.construction_tags.push_back(e->name);
                    if (e->rank != rec.rank)
                        throw std::logic_error("filter_chern: construction rank mismatch");
                }
                rec.rule_trace = cand.trace;
                for (const auto& t : pin_trace) rec.rule_trace.push_back(t);
                rec.rule_trace.push_back("c4 from construction");

                SchwarzenbergerResult sr = schwarzenberger_full(rec.chern);
                if (!sr.holds()) throw std::logic_error("filter_chern: record fails Schwarzenberger");
                rec.rule_trace.push_back("schwarzenberger verified");
                auto rf = rank_formula(c2, c3, c4, 0);
                if (!rf.integral || rf.value != rec.rank)
                    throw std::logic_error("filter_chern: rank formula mismatch");
                rec.rule_trace.push_back("rank consistent with RR rank formula (h2(E^dual) = 0)");
                rec.assumptions = assumptions;
                out.records.push_back(std::move(rec));
            }
        }
    }

    std::sort(out.records.begin(), out.records.end(), [](const CandidateRecord& a, const CandidateRecord& b) {
        if (a.chern.c_at(2) != b.chern.c_at(2)) return a.chern.c_at(2) < b.chern.c_at(2);
        if (a.chern.c_at(3) != b.chern.c_at(3)) return a.chern.c_at(3) < b.chern.c_at(3);
        return a.chern.c_at(4) < b.chern.c_at(4);
    });
    return out;
}

ThmMainReport verify_thm_main() {
    ThmMainReport report;
    struct Spec {
        int n;
        std::string name;
    };
    const std::vector<Spec> wanted = {
        {4, "O(5)"},
        {4, "P(O(5))"},
        {4, "coker[Om(3,3)->Om(2,2)+Om(1,1)](1)"},
        {4, "ker[Om(2,2)+Om(1,1)->O](1)"},
        {5, "coker[Om(4,4)->Om(2,2)](1)"},
        {5, "ker[Om(2,2)->O](1)"},
        {6, "Om(1,2)"},
        {6, "Om(4,5)"},
    };

    std::map<int, std::vector<CatalogEntry>> catalogs;
    for (int n : {4, 5, 6}) catalogs[n] = named_bundle_catalog(n);
    auto find_entry = [&](int n, const std::string& name) -> const CatalogEntry* {
        for (const auto& e : catalogs[n])
            if (e.name == name) return &e;
        return nullptr;
    };

    report.all_pass = true;
    for (std::size_t idx = 0; idx < wanted.size(); ++idx) {
        ThmMainReport::Item item;
        item.index = static_cast<int>(idx) + 1;
        item.n = wanted[idx].n;
        item.name = wanted[idx].name;
        const CatalogEntry* e = find_entry(wanted[idx].n, wanted[idx].name);
        if (!e) {
            item.pass = false;
            item.failures.push_back("entry missing from catalog");
            report.items.push_back(std::move(item));
            report.all_pass = false;
            continue;
        }
        item.rank = e->rank;
        item.chern = e->chern;
        item.pass = true;
        auto check = [&](bool ok, const std::string& what) {
            if (ok)
                item.checks.push_back(what);
            else {
                item.failures.push_back(what);
                item.pass = false;
            }
        };

        check(e->chern.c_at(1) == 5, "c1 = 5");

        ChernVector restricted(4, e->rank, {e->chern.c_at(1), e->chern.c_at(2), e->chern.c_at(3), e->chern.c_at(4)});
        check(schwarzenberger(restricted), "Schwarzenberger congruence on (c1..c4)");

        if (e->rr_rank_applies) {
            auto rf = rank_formula(e->chern.c_at(2), e->chern.c_at(3), e->chern.c_at(4), 0);
            check(rf.integral && rf.value == e->rank, "rank matches RR rank formula with h2(E^dual) = 0");
        }

        if (!e->partner.empty()) {
            const CatalogEntry* p = find_entry(e->n, e->partner);
            if (!p) {
                check(false, "partner present in catalog");
            } else if (idx % 2 == 0) { // check each pairing once, from the first member
                ChernVector pe = p_functor(e->chern);
                check(pe.c == p->chern.c, "P-functor pairing at Chern level (all degrees)");

                bool higher_vanish = true;
                std::optional<Int> h0 = catalog_h(*e, 0, 0);
                for (int q = 1; q <= e->n; ++q) {
                    auto hq = catalog_h(*e, q, 0);
                    if (!hq || *hq != 0) higher_vanish = false;
                }
                check(higher_vanish, "higher cohomology of E vanishes (table)");
                if (h0) {
                    check(*h0 == euler_characteristic(e->chern, 0), "h0(E) = chi(E)");
                    check(p->rank == *h0 - e->rank, "rank P(E) = h0(E) - rank E");
                } else {
                    check(false, "h0(E) determined by the display");
                }
            }
        }
        if (!item.pass) report.all_pass = false;
        report.items.push_back(std::move(item));
    }
    return report;
}

} // namespace pnb
