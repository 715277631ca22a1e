#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "pnb/cohomtab.hpp"
#include "pnb/monadlab.hpp"

#include <set>

using namespace pnb;

TEST_CASE("line cohomology") {
    CHECK(line_cohomology(4, 2)[0] == 15);
    CHECK(line_cohomology(3, -4)[3] == 1);
    for (int q = 0; q <= 4; ++q) CHECK(line_cohomology(4, -3)[static_cast<std::size_t>(q)] == 0);
    CHECK(line_cohomology(4, 0)[0] == 1);
}

TEST_CASE("bott examples") {
    CHECK(bott(4, 1, 2)[0] == 10); // H0(Om^1(2)) = Lambda^2 V^dual
    CHECK(bott(4, 1, 0)[1] == 1);
    CHECK(bott(5, 2, 3)[0] == 20);
    CHECK_THROWS_AS(bott(4, 5, 1), std::invalid_argument);
}

TEST_CASE("bott agrees with the Koszul/Euler oracle everywhere") {
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p)
            for (long l = -10; l <= 10; ++l) {
                auto lib = bott(n, p, l);
                auto orc = oracle::koszul_euler_h(n, p, l);
                CHECK(lib == orc);
            }
}

TEST_CASE("bott h0 agrees with the explicit kernel computation on small cases") {
    for (int n = 2; n <= 3; ++n)
        for (int p = 1; p <= n; ++p)
            for (long l = p - 1; l <= p + 3; ++l)
                CHECK(oracle::koszul_kernel_h0_direct(n, p, l) == bott(n, p, l)[0].get_si());
    CHECK(oracle::koszul_kernel_h0_direct(4, 2, 3) == bott(4, 2, 3)[0].get_si());
    CHECK(oracle::koszul_kernel_h0_direct(4, 3, 4) == bott(4, 3, 4)[0].get_si());
}

TEST_CASE("bott alternating sums match Riemann-Roch") {
    for (int n = 2; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
            ChernVector c = expr_chern(BundleExpr::omega(p, 0), n);
            for (long l = -8; l <= 8; ++l) {
                auto h = bott(n, p, l);
                Int alt = 0;
                for (int q = 0; q <= n; ++q) alt += (q % 2 == 0) ? h[static_cast<std::size_t>(q)] : -h[static_cast<std::size_t>(q)];
                CHECK(alt == euler_characteristic(c, l));
            }
        }
}

TEST_CASE("spectrum h1/h2 values") {
    Spectrum s({1, 0, 0, -1});
    CHECK(spectrum_h1(s, -1) == 4);
    CHECK(spectrum_h1(s, -2) == 1);
    CHECK(spectrum_h2(s, -2) == 1);
    CHECK(spectrum_h1(Spectrum(std::vector<int>{}), -3) == 0);
    CHECK(spectrum_h2(Spectrum(std::vector<int>{}), 0) == 0);
    CHECK_THROWS_AS(spectrum_h1(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_h2(s, -3), std::invalid_argument);
}

TEST_CASE("spectrum dims are monotone in the valid windows") {
    std::mt19937 rng(31);
    for (int t = 0; t < 200; ++t) {
        int m = 1 + static_cast<int>(rng() % 4);
        std::vector<int> k;
        for (int i = 0; i < m; ++i) k.push_back(1 - static_cast<int>(rng() % 4));
        std::sort(k.begin(), k.end(), std::greater<int>());
        Spectrum s(k);
        for (long l = -8; l < -1; ++l) CHECK(spectrum_h1(s, l) <= spectrum_h1(s, l + 1));
        for (long l = -2; l < 6; ++l) CHECK(spectrum_h2(s, l) >= spectrum_h2(s, l + 1));
    }
}

TEST_CASE("spectrum shape predicates") {
    CHECK(Spectrum({1, 0, 0, -1}).nonneg_connected());
    CHECK_FALSE(Spectrum({1, -1, -1}).nonneg_connected());
    CHECK_FALSE(Spectrum({0, -2, -2}).nonpos_connected());
    CHECK(Spectrum({0, -1, -2}).nonpos_connected());
    CHECK(Spectrum({-1, -1}).zero_or_double_minus1());
    CHECK_FALSE(Spectrum({-1, -2, -2}).zero_or_double_minus1());
    CHECK_THROWS_AS(Spectrum({0, 1}), std::invalid_argument);

    CHECK(Spectrum({-1, -2, -3}).unstable_plane_order() == 3);
    CHECK_FALSE(Spectrum({0, -1, -1, -2}).unstable_plane_order().has_value());
    CHECK_FALSE(Spectrum({1, 0, -1}).unstable_plane_order().has_value());
}

TEST_CASE("enumerate_spectra examples") {
    auto s44 = enumerate_spectra(4, 4);
    REQUIRE(s44.size() == 2);
    CHECK(s44[0].k == std::vector<int>{0, -1, -1, -2});
    CHECK(s44[1].k == std::vector<int>{-1, -1, -1, -1});

    // c2(G) = 2, c3(G) = -4, positive part allowed
    auto s2 = enumerate_spectra(2, -4);
    CHECK(std::find(s2.begin(), s2.end(), Spectrum({1, 0})) != s2.end());

    // c2(G) = 3, c3(G) >= 3: union of the c3(G) = 3 and c3(G) = 5 lists
    std::set<std::vector<int>> got;
    for (long c3g : {3L, 5L})
        for (const auto& s : enumerate_spectra(3, c3g)) got.insert(s.k);
    std::set<std::vector<int>> expect = {{0, -1, -2}, {-1, -1, -1}, {-1, -1, -2}};
    CHECK(got == expect);

    CHECK(enumerate_spectra(3, 7).empty());
    CHECK_THROWS_AS(enumerate_spectra(3, 4), std::invalid_argument); // parity
    CHECK_THROWS_AS(enumerate_spectra(5, 5), std::invalid_argument);

    // k1 <= 0 filter removes the positive-part spectra
    auto s2f = enumerate_spectra(2, -4, SpectrumOptions{true});
    CHECK(s2f.empty());
}

TEST_CASE("enumerate_spectra against brute force") {
    for (int m = 1; m <= 4; ++m)
        for (long sum = -2 * m; sum <= m; ++sum) {
            long c3g = -2 * sum - m; // sum = -(c3g + m)/2
            for (bool flag : {false, true}) {
                auto lib = enumerate_spectra(m, c3g, SpectrumOptions{flag});
                std::set<std::vector<int>> lib_set;
                for (const auto& s : lib) {
                    CHECK(s.length() == m);
                    CHECK(s.sum() == sum);
                    CHECK(s.nonneg_connected());
                    CHECK(s.nonpos_connected());
                    CHECK(s.zero_or_double_minus1());
                    lib_set.insert(s.k);
                }
                CHECK(lib_set.size() == lib.size());
                auto brute = oracle::spectra_brute_force(m, sum, flag);
                CHECK(lib_set == std::set<std::vector<int>>(brute.begin(), brute.end()));
            }
        }
}

TEST_CASE("h1 closed forms") {
    CHECK(h1_formulas(12, 16, 0).first == 2);
    CHECK(h1_formulas(12, 8, 0).first == 6);
    CHECK(h1_formulas(10, 10, 0).first == 0);
    CHECK(h1_formulas(11, 13, 3).second == (7 * (11 - 10) - 13) / 2 + 3);
    CHECK_THROWS_AS(h1_formulas(12, 13, 0), std::invalid_argument);

    // non-negativity of h^1(F(-2)) cuts c3 at exactly the spectrum bound
    for (long c2 = 10; c2 <= 12; ++c2) {
        long max_admissible = 0;
        for (long c3 = c2 - 4; c3 <= 5 * c2 - 30; c3 += 2)
            if (!enumerate_spectra(static_cast<int>(c2) - 8, c3 - 2 * c2 + 12).empty())
                max_admissible = c3;
        CHECK(max_admissible == 5 * c2 - 40);
        CHECK(h1_formulas(c2, max_admissible, 0).first == 0);
        CHECK(h1_formulas(c2, max_admissible + 2, 0).first < 0);
    }
}

TEST_CASE("h0 bound for c2 = 11") {
    CHECK(h0fm1_bound_c2_11(13) == 3);
    CHECK(h0fm1_bound_c2_11(7) == 1);
    CHECK(h0fm1_bound_c2_11(15) == 4);
    CHECK(h0fm1_bound_c2_11(1) == 1); // max(negative, 1)
    CHECK_THROWS_AS(h0fm1_bound_c2_11(12), std::invalid_argument);
}

TEST_CASE("bilinear map bound") {
    CHECK_FALSE(bml_bound(5, 2, 2, 2));
    for (long b = 1; b <= 6; ++b)
        for (long c = 1; c <= 6; ++c) CHECK(bml_bound(1, b, c, 1));
    // r = b specializes to a <= c - b + 1
    for (long a = 1; a <= 8; ++a)
        for (long b = 1; b <= 4; ++b)
            for (long c = b; c <= 8; ++c) CHECK(bml_bound(a, b, c, b) == (a <= c - b + 1));
    CHECK_THROWS_AS(bml_bound(5, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(bml_bound(5, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("koszul kernel thresholds") {
    CHECK(koszul_gg_threshold(4, {2, 2, 2, 2, 3}) == 5);
    CHECK_FALSE(koszul_gg(4, {2, 2, 2, 2, 3}, 4));
    CHECK(koszul_gg_threshold(4, {1, 1, 1, 1, 1}) == 2);
    CHECK(koszul_gg_threshold(3, {2, 2, 2, 2}) == 4);
    CHECK(koszul_gg(3, {2, 2, 2, 2}, 4));
    CHECK_THROWS_AS(koszul_gg_threshold(4, {2, 2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(koszul_gg_threshold(3, {0, 2, 2, 2}), std::invalid_argument);
}

TEST_CASE("cohomology table bookkeeping") {
    CohomologyTable t(3, -2, 1);
    t.at(0, 0) = Int(7);
    t.at(0, 1) = Int(1);
    t.at(0, 2) = Int(0);
    CHECK_FALSE(t.fully_determined(0));
    t.at(0, 3) = Int(0);
    CHECK(t.fully_determined(0));
    CHECK(t.chi(0) == 6);
    CHECK_THROWS_AS(t.chi(1), std::domain_error);
    CHECK_THROWS_AS(t.at(5, 0), std::out_of_range);
}
