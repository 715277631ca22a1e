// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// nonzero exit if anything fails. Everything is exact integer/rational
// arithmetic; there are no tolerances anywhere.

#include "oracles.hpp"
#include "pnb/chowring.hpp"
#include "pnb/classifier.hpp"
#include "pnb/cohomtab.hpp"
#include "pnb/exterior.hpp"
#include "pnb/monadlab.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

using namespace pnb;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::ostream&)> check;
};

bool require(std::ostream& log, bool cond, const std::string& what) {
    if (!cond) log << "      failed: " << what << "\n";
    return cond;
}

// 1. Schwarzenberger congruence on the seven admissible P^4 triples and the
//    rank-2 counterexample.
bool criterion1(std::ostream& log) {
    bool ok = true;
    const std::vector<std::tuple<long, long, long>> triples = {
        {10, 10, 5}, {11, 15, 16}, {11, 13, 9}, {12, 20, 28}, {12, 18, 21}, {12, 18, 15}, {12, 16, 8}};
    for (const auto& [c2, c3, c4] : triples) {
        ChernVector c(4, 0, {Int(5), Int(c2), Int(c3), Int(c4)});
        std::ostringstream what;
        what << "schwarzenberger(5," << c2 << "," << c3 << "," << c4 << ") = true";
        ok &= require(log, schwarzenberger(c), what.str());
    }
    ok &= require(log, !schwarzenberger(ChernVector(4, 2, {5, 8, 0, 0})),
                  "schwarzenberger(5,8,0,0) = false");
    return ok;
}

// 2. P-functor involution on 1000 random integer tuples and degree-by-degree
//    agreement with the truncated-series-inverse oracle.
bool criterion2(std::ostream& log) {
    std::mt19937 rng(20240521);
    std::uniform_int_distribution<long> d(-20, 20);
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
        ChernVector a(4, 0, {Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(d(rng))});
        ChernVector p = p_functor(a);
        ok &= require(log, p_functor(p).c == a.c, "P(P(a)) = a");
        std::vector<Int> dual_total = {1, -a.c_at(1), a.c_at(2), -a.c_at(3), a.c_at(4)};
        std::vector<Int> inv = oracle::series_inverse(dual_total);
        for (int i = 1; i <= 4; ++i)
            ok &= require(log, p.c_at(i) == inv[static_cast<std::size_t>(i)],
                          "P agrees with 1/c(E^dual) in degree " + std::to_string(i));
    }
    return ok;
}

// 3. The closed forms of h^2(E(-3)) - h^1(E(-3)). The two headline forms
//    (5-c4)/6 and (2-c4)/6 belong to c3 = c2 (at c2 = 10, 11); the c2 = 12
//    classification uses (14-c4)/6 at c3 = 16. The pairs (11,13) and (12,14)
//    have their own closed forms, checked as well.
bool criterion3(std::ostream& log) {
    bool ok = true;
    for (long c4 = -12; c4 <= 36; ++c4) {
        ok &= require(log, rr_h2_minus_h1(10, 10, c4) == make_rat(5 - c4, 6), "(10,10): (5-c4)/6");
        ok &= require(log, rr_h2_minus_h1(11, 11, c4) == make_rat(2 - c4, 6), "(11,11): (2-c4)/6");
        ok &= require(log, rr_h2_minus_h1(12, 16, c4) == make_rat(14 - c4, 6), "(12,16): (14-c4)/6");
        ok &= require(log, rr_h2_minus_h1(11, 13, c4) == make_rat(9 - c4, 6), "(11,13): (9-c4)/6");
        ok &= require(log, rr_h2_minus_h1(12, 14, c4) == make_rat(7 - c4, 6), "(12,14): (7-c4)/6");
        ok &= require(log, rr_h2_minus_h1(12, 12, c4) == make_rat(-c4, 6), "(12,12): -c4/6");
    }
    return ok;
}

// 4. Euler characteristics on P^3 used by the hyperplane-restriction
//    arguments.
bool criterion4(std::ostream& log) {
    bool ok = require(log, euler_characteristic(ChernVector(3, 4, {5, 12, 10})) == 10,
                      "chi(rank 4, (5,12,10)) = 10");
    for (long r = 3; r <= 10; ++r)
        ok &= require(log, euler_characteristic(ChernVector(3, r, {5, 12, 12})) == r + 7,
                      "chi(rank r, (5,12,12)) = r + 7");
    return ok;
}

// 5. Bott's formula against the Koszul/Euler dimension oracle over the full
//    window, plus Riemann-Roch alternating sums.
bool criterion5(std::ostream& log) {
    bool ok = true;
    long cases = 0;
    for (int n = 1; n <= 6 && ok; ++n)
        for (int p = 0; p <= n && ok; ++p) {
            ChernVector c = expr_chern(BundleExpr::omega(p, 0), n);
            for (long l = -10; l <= 10 && ok; ++l) {
                auto lib = bott(n, p, l);
                ok &= require(log, lib == oracle::koszul_euler_h(n, p, l),
                              "bott(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(l) + ") = oracle");
                Int alt = 0;
                for (int q = 0; q <= n; ++q)
                    alt += (q % 2 == 0) ? lib[static_cast<std::size_t>(q)] : -lib[static_cast<std::size_t>(q)];
                ok &= require(log, alt == euler_characteristic(c, l), "alternating sum = chi");
                cases += n + 1;
            }
        }
    log << "      (" << cases << " dimension checks)\n";
    return ok;
}

// 6. Spectrum suite.
bool criterion6(std::ostream& log) {
    auto spectra = enumerate_spectra(4, 4);
    bool ok = require(log, spectra.size() == 2, "two spectra for c2(G) = c3(G) = 4");
    if (ok) {
        ok &= require(log, spectra[0].k == std::vector<int>{0, -1, -1, -2}, "(0,-1,-1,-2) listed");
        ok &= require(log, spectra[1].k == std::vector<int>{-1, -1, -1, -1}, "(-1,-1,-1,-1) listed");
    }
    Spectrum s({1, 0, 0, -1});
    ok &= require(log, spectrum_h1(s, -1) == 4, "h1(G(-1)) = 4");
    ok &= require(log, spectrum_h1(s, -2) == 1, "h1(G(-2)) = 1");
    ok &= require(log, spectrum_h2(s, -2) == 1, "h2(G(-2)) = 1");
    return ok;
}

// 7. Exterior-algebra suite: epimorphism criteria against H^0 matrix ranks
//    on random strata, and the contraction adjunction.
bool criterion7(std::ostream& log) {
    std::mt19937 rng(777);
    bool ok = true;
    for (int k = 0; k <= 3 && ok; ++k)
        for (int t = 0; t < 200 && ok; ++t) {
            Multivector omega = oracle::random_two_vector(6, k, rng);
            bool epi = horrocks_epi_check(omega);
            ok &= require(log, epi == (k == 3), "horrocks_epi_check on the rank stratum");
            ok &= require(log, epi == (h0_matrix(make_horrocks_spec(omega)).rank == 15),
                          "horrocks_epi_check = (H0 rank 15)");
        }

    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < 200 && ok; ++t) {
        Multivector omega = oracle::random_two_vector(5, static_cast<int>(rng() % 3), rng);
        Multivector v(5, 1);
        while (v.is_zero())
            for (int i = 0; i < 5; ++i) v.set(1u << i, Rat(coeff(rng)));
        ok &= require(log, sasakura_gg_check(omega, v) == (h0_matrix(make_sasakura_spec(omega, v)).rank == 10),
                      "sasakura_gg_check = (H0 rank 10)");
    }

    int done = 0;
    while (done < 1000 && ok) {
        int dim = 2 + static_cast<int>(rng() % 6);
        int gw = static_cast<int>(rng() % (dim + 1));
        int geta = static_cast<int>(rng() % (dim - gw + 1));
        Multivector alpha = oracle::random_multivector(dim, gw + geta, rng, true);
        Multivector omega = oracle::random_multivector(dim, gw, rng);
        Multivector eta = oracle::random_multivector(dim, geta, rng);
        ok &= require(log, pairing(contract(alpha, omega), eta) == pairing(alpha, wedge(omega, eta)),
                      "<alpha . omega, eta> = <alpha, omega ^ eta>");
        ++done;
    }
    return ok;
}

// 8. Monad suite: the classified displays and the P-functor pairing.
bool criterion8(std::ostream& log) {
    ComplexExpr iii{ComplexExpr::Kind::LeftResolution,
                    {BundleExpr::omega(3, 3), BundleExpr::sum({BundleExpr::omega(2, 2), BundleExpr::omega(1, 1)})}};
    auto [rank3, chern3] = complex_cohomology_bundle(iii, 4);
    ChernVector e3 = chern_twist(chern3, 1);
    bool ok = require(log, rank3 == 6, "coker display on P^4 has rank 6");
    ok &= require(log, e3.c == std::vector<Int>{5, 12, 16, 8}, "twisted Chern classes (5,12,16,8)");

    ComplexExpr v{ComplexExpr::Kind::LeftResolution, {BundleExpr::omega(4, 4), BundleExpr::omega(2, 2)}};
    auto [rank5, chern5] = complex_cohomology_bundle(v, 5);
    ok &= require(log, rank5 == 5, "coker display on P^5 has rank 5");

    ComplexExpr iv{ComplexExpr::Kind::ShortExactSub,
                   {BundleExpr::sum({BundleExpr::omega(2, 2), BundleExpr::omega(1, 1)}), BundleExpr::line(0)}};
    auto [rank4, chern4] = complex_cohomology_bundle(iv, 4);
    ChernVector e4 = chern_twist(chern4, 1);
    ok &= require(log, rank4 == 9, "kernel display on P^4 has rank 9");
    ok &= require(log, p_functor(e3).c == e4.c, "P-functor pairing at Chern level");
    return ok;
}

// 9. Koszul global-generation thresholds.
bool criterion9(std::ostream& log) {
    bool ok = require(log, koszul_gg_threshold(4, {2, 2, 2, 2, 3}) == 5, "threshold(2,2,2,2,3) = 5");
    ok &= require(log, !koszul_gg(4, {2, 2, 2, 2, 3}, 4), "K(4) on P^4 not globally generated");
    ok &= require(log, koszul_gg_threshold(3, {2, 2, 2, 2}) == 4, "threshold(2,2,2,2) = 4");
    ok &= require(log, koszul_gg(3, {2, 2, 2, 2}, 4), "K(4) on P^3 globally generated");
    return ok;
}

// 10. Classification regression: the filter reproduces the seven triples and
//     every catalogued bundle passes its checks.
bool criterion10(std::ostream& log) {
    FilterResult fr = filter_chern(4);
    std::set<std::tuple<long, long, long>> got;
    for (const auto& r : fr.records)
        got.insert({r.chern.c_at(2).get_si(), r.chern.c_at(3).get_si(), r.chern.c_at(4).get_si()});
    std::set<std::tuple<long, long, long>> expect = {
        {10, 10, 5}, {11, 15, 16}, {11, 13, 9}, {12, 20, 28}, {12, 18, 21}, {12, 18, 15}, {12, 16, 8}};
    bool ok = require(log, got == expect, "filter_chern yields exactly the seven triples");
    ok &= require(log, fr.records.size() == 7, "no duplicate records");

    ThmMainReport rep = verify_thm_main();
    ok &= require(log, rep.items.size() == 8, "eight catalogued items");
    for (const auto& it : rep.items)
        ok &= require(log, it.pass, "item " + std::to_string(it.index) + " (" + it.name + ") passes");
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Schwarzenberger congruence suite", criterion1},
        {2, "P-functor involution and series oracle (1000 random tuples)", criterion2},
        {3, "Riemann-Roch h2-h1 closed forms", criterion3},
        {4, "Euler characteristics on P^3", criterion4},
        {5, "Bott formula vs Koszul/Euler oracle (n <= 6, |l| <= 10)", criterion5},
        {6, "Spectrum enumeration and dimension formulas", criterion6},
        {7, "Exterior suite: epimorphism criteria and adjunction", criterion7},
        {8, "Monad suite: displays, ranks, P-functor pairing", criterion8},
        {9, "Koszul global-generation thresholds", criterion9},
        {10, "Classification regression (seven triples, eight items)", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.check(log);
        } catch (const std::exception& e) {
            log << "      exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << "\n";
        if (!log.str().empty()) std::cout << log.str();
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::cout << "all 10 acceptance criteria passed (exact arithmetic, tolerance 0)\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
}
