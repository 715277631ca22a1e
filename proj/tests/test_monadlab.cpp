#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pnb/monadlab.hpp"

#include <random>

using namespace pnb;
using BE = BundleExpr;

namespace {

ComplexExpr thm_iii_display() {
    return {ComplexExpr::Kind::LeftResolution, {BE::omega(3, 3), BE::sum({BE::omega(2, 2), BE::omega(1, 1)})}};
}

ComplexExpr thm_v_display() { return {ComplexExpr::Kind::LeftResolution, {BE::omega(4, 4), BE::omega(2, 2)}}; }

Int table_chi(const CohomologyTable& t, long l) { return t.chi(l); }

BE random_expr(std::mt19937& rng, int n, int depth = 0) {
    switch (rng() % (depth > 2 ? 4 : 7)) {
        case 0: return BE::line(static_cast<long>(rng() % 7) - 3);
        case 1: return BE::omega(static_cast<int>(rng() % (n + 1)), static_cast<long>(rng() % 7) - 3);
        case 2: return BE::tangent_twist();
        case 3: return BE::p_of_line(static_cast<long>(rng() % 3));
        case 4: return BE::dual(random_expr(rng, n, depth + 1));
        case 5: return BE::twist(random_expr(rng, n, depth + 1), static_cast<long>(rng() % 5) - 2);
        default:
            return BE::sum({random_expr(rng, n, depth + 1), random_expr(rng, n, depth + 1)});
    }
}

} // namespace

TEST_CASE("expression parsing") {
    CHECK(parse_bundle_expr("O(5)").to_string() == "O(5)");
    CHECK(parse_bundle_expr("Om(2, 3)").to_string() == "Om(2,3)");
    CHECK(parse_bundle_expr("T(-1)").to_string() == "T(-1)");
    CHECK(parse_bundle_expr("P(O(5))").to_string() == "P(O(5))");
    CHECK(parse_bundle_expr("4O(1) + T(-1)").to_string() == "O(1) + O(1) + O(1) + O(1) + T(-1)");
    CHECK(parse_bundle_expr("twist(dual(Om(1,2)), -1)").to_string() == "twist(dual(Om(1,2)),-1)");
    CHECK_THROWS_AS(parse_bundle_expr("T(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle_expr("O(1) +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle_expr("Q(3)"), std::invalid_argument);

    // round trip on random expressions
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t) {
        BE e = random_expr(rng, 4);
        BE reparsed = parse_bundle_expr(e.to_string());
        CHECK(expr_rank(reparsed, 4) == expr_rank(e, 4));
        CHECK(expr_chern(reparsed, 4) == expr_chern(e, 4));
    }
}

TEST_CASE("expr_data for the standard bundles") {
    ExprData om12 = expr_data(BE::omega(1, 2), 4, 0, 0);
    CHECK(om12.rank == 4);
    CHECK(om12.chern.c_at(1) == 3);
    CHECK(om12.table.at(0, 0) == Int(10));

    ChernVector t_m1 = expr_chern(BE::tangent_twist(), 4);
    CHECK(expr_rank(BE::tangent_twist(), 4) == 4);
    CHECK(t_m1.c == std::vector<Int>{1, 1, 1, 1});

    CHECK_THROWS_AS(expr_chern(BE::omega(5, 1), 4), std::invalid_argument);
}

TEST_CASE("P(O(1)) is the twisted tangent bundle at every level we compute") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(expr_rank(BE::p_of_line(1), n) == n);
        CHECK(expr_chern(BE::p_of_line(1), n).c == expr_chern(BE::tangent_twist(), n).c);
        for (long l = -2 * n; l <= 4; ++l)
            CHECK(expr_h(BE::p_of_line(1), n, l) == expr_h(BE::tangent_twist(), n, l));
    }
}

TEST_CASE("P(O(b)) rank and Euler characteristics") {
    for (int n = 2; n <= 5; ++n)
        for (long b = 0; b <= 4; ++b) {
            BE p = BE::p_of_line(b);
            CHECK(expr_rank(p, n) == binomial(Int(n + b), n) - 1);
            ChernVector c = expr_chern(p, n);
            c.rank = expr_rank(p, n);
            for (long l = -2 * n - 2; l <= 4; ++l) {
                auto h = expr_h(p, n, l);
                Int alt = 0;
                for (int q = 0; q <= n; ++q) alt += (q % 2 == 0) ? h[static_cast<std::size_t>(q)] : -h[static_cast<std::size_t>(q)];
                CHECK(alt == euler_characteristic(c, l));
            }
        }
}

TEST_CASE("tables of random expressions match Riemann-Roch") {
    std::mt19937 rng(43);
    for (int t = 0; t < 150; ++t) {
        int n = 2 + static_cast<int>(rng() % 4); // 2..5
        BE e = random_expr(rng, n);
        ChernVector c = expr_chern(e, n);
        c.rank = expr_rank(e, n);
        for (long l = -n - 3; l <= 3; ++l) {
            auto h = expr_h(e, n, l);
            Int alt = 0;
            for (int q = 0; q <= n; ++q) alt += (q % 2 == 0) ? h[static_cast<std::size_t>(q)] : -h[static_cast<std::size_t>(q)];
            CHECK(alt == euler_characteristic(c, l));
        }
    }
}

TEST_CASE("dual, twist and sum laws hold at rank and Chern level") {
    std::mt19937 rng(47);
    for (int t = 0; t < 120; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        BE a = random_expr(rng, n), b = random_expr(rng, n);
        CHECK(expr_chern(BE::dual(BE::dual(a)), n) == expr_chern(a, n));
        CHECK(expr_chern(BE::twist(BE::twist(a, 2), -3), n) == expr_chern(BE::twist(a, -1), n));
        CHECK(expr_rank(BE::sum({a, b}), n) == expr_rank(a, n) + expr_rank(b, n));
        CHECK(expr_chern(BE::sum({a, b}), n) == chern_mul(expr_chern(a, n), expr_chern(b, n)));
        // dual distributes over twist: (E(t))^dual = E^dual(-t)
        CHECK(expr_chern(BE::dual(BE::twist(a, 2)), n) == expr_chern(BE::twist(BE::dual(a), -2), n));
    }
}

TEST_CASE("complex cohomology bundles") {
    // twisted coker display: rank 6, c = (5,12,16,8)
    auto [rank_iii, chern_iii] = complex_cohomology_bundle(thm_iii_display(), 4);
    CHECK(rank_iii == 6);
    ChernVector twisted = chern_twist(chern_iii, 1);
    CHECK(twisted.c == std::vector<Int>{5, 12, 16, 8});

    // companion kernel display is the P-functor partner
    ComplexExpr iv{ComplexExpr::Kind::ShortExactSub, {BE::sum({BE::omega(2, 2), BE::omega(1, 1)}), BE::line(0)}};
    auto [rank_iv, chern_iv] = complex_cohomology_bundle(iv, 4);
    CHECK(rank_iv == 9);
    CHECK(chern_twist(chern_iv, 1).c == p_functor(twisted).c);

    // rank 5 on P^5
    auto [rank_v, chern_v] = complex_cohomology_bundle(thm_v_display(), 5);
    CHECK(rank_v == 5);
    CHECK(chern_twist(chern_v, 1).c_at(1) == 5);

    // single-term complex
    ComplexExpr single{ComplexExpr::Kind::LeftResolution, {BE::line(0)}};
    auto [rank_o, chern_o] = complex_cohomology_bundle(single, 4);
    CHECK(rank_o == 1);
    CHECK(chern_o.c == std::vector<Int>{0, 0, 0, 0});

    // impossible display: negative rank
    ComplexExpr bad{ComplexExpr::Kind::LeftResolution, {BE::omega(1, 1), BE::line(0)}};
    CHECK_THROWS_AS(complex_cohomology_bundle(bad, 4), std::domain_error);
}

TEST_CASE("monad table for the twisted coker display on P^4") {
    CohomologyTable t = monad_cohomology_table(thm_iii_display(), 4, -4, 2);
    // table is for E(-1); E(-2) sits at l = -1, E(-3) at l = -2
    CHECK(t.at(-1, 1) == Int(1)); // h^1(E(-2)) = 1
    CHECK(t.at(-2, 2) == Int(1)); // h^2(E(-3)) = 1
    CHECK(t.at(-3, 2) == Int(1)); // h^2(E(-4)) = 1
    CHECK(t.at(1, 0) == Int(15)); // h^0(E) = 15
    for (int q = 1; q <= 4; ++q) CHECK(t.at(1, q) == Int(0));

    auto [rank, chern] = complex_cohomology_bundle(thm_iii_display(), 4);
    chern.rank = rank;
    for (long l = -4; l <= 2; ++l) {
        REQUIRE(t.fully_determined(l));
        CHECK(table_chi(t, l) == euler_characteristic(chern, l));
    }
}

TEST_CASE("monad table for the P^5 display") {
    CohomologyTable t = monad_cohomology_table(thm_v_display(), 5, -4, 1);
    CHECK(t.at(-1, 1) == Int(0)); // H^1(E(-2)) = 0
    CHECK(t.at(-2, 2) == Int(1)); // h^2(E(-3)) = 1
    CHECK(t.at(-4, 3) == Int(1)); // h^3(E(-5)) = 1
    CHECK(t.at(1, 0) == Int(14)); // h^0(E) = 14

    auto [rank, chern] = complex_cohomology_bundle(thm_v_display(), 5);
    chern.rank = rank;
    for (long l = -4; l <= 1; ++l) {
        REQUIRE(t.fully_determined(l));
        CHECK(table_chi(t, l) == euler_characteristic(chern, l));
    }
}

TEST_CASE("single-term table equals line cohomology") {
    ComplexExpr single{ComplexExpr::Kind::LeftResolution, {BE::line(5)}};
    CohomologyTable t = monad_cohomology_table(single, 4, -8, 2);
    for (long l = -8; l <= 2; ++l) {
        auto h = line_cohomology(4, 5 + l);
        for (int q = 0; q <= 4; ++q) CHECK(t.at(l, q) == h[static_cast<std::size_t>(q)]);
    }
}

TEST_CASE("kernel monad display on P^3") {
    // F(-2) is the cohomology of 0 -> O(-1) -> 4O + 2O(-1) -> O(2) -> 0
    ComplexExpr horr{ComplexExpr::Kind::Monad,
                     {BE::line(-1),
                      BE::sum({BE::line(0), BE::line(0), BE::line(0), BE::line(0), BE::line(-1), BE::line(-1)}),
                      BE::line(2)}};
    auto [rank, chern] = complex_cohomology_bundle(horr, 3);
    CHECK(rank == 4);
    ChernVector f = chern_twist(chern, 2);
    CHECK(f.c == std::vector<Int>{5, 12, 8});

    // chi bookkeeping holds even where single entries stay undetermined
    CohomologyTable t = monad_cohomology_table(horr, 3, -2, 3);
    f.rank = rank;
    for (long l = -2; l <= 3; ++l)
        if (t.fully_determined(l)) CHECK(table_chi(t, l) == euler_characteristic(chern_twist(f, -2), l));
    CHECK_FALSE(t.fully_determined(2)); // h^0, h^1 of F depend on the actual maps

    // the closed form pins h^1(F(-2)) = 6, which is the section count the
    // corresponding minimal monad bookkeeping produces: h^0(O(2) + 2O) - 6 = 6
    auto [h1fm2, h1fm1] = h1_formulas(12, 8, 0);
    CHECK(h1fm2 == 6);
    CHECK(line_cohomology(3, 2)[0] + 2 - h1fm2 == 6);
}

TEST_CASE("catalog invariants") {
    for (int n : {4, 5, 6}) {
        auto cat = named_bundle_catalog(n);
        CHECK(cat.size() >= 7);
        for (const auto& e : cat) {
            CHECK(e.chern.c_at(1) == 5);
            ChernVector restricted(4, e.rank,
                                   {e.chern.c_at(1), e.chern.c_at(2), e.chern.c_at(3), e.chern.c_at(4)});
            CHECK(schwarzenberger(restricted));
            if (e.rr_rank_applies) {
                auto rf = rank_formula(e.chern.c_at(2), e.chern.c_at(3), e.chern.c_at(4), 0);
                CHECK(rf.integral);
                CHECK(rf.value == e.rank);
            }
            if (!e.partner.empty()) {
                auto p = std::find_if(cat.begin(), cat.end(),
                                      [&](const CatalogEntry& x) { return x.name == e.partner; });
                REQUIRE(p != cat.end());
                CHECK(p_functor(e.chern).c == p->chern.c);
            }
        }
    }
}

TEST_CASE("catalog values on P^4") {
    auto cat = named_bundle_catalog(4);
    auto get = [&](const std::string& name) {
        auto it = std::find_if(cat.begin(), cat.end(), [&](const CatalogEntry& e) { return e.name == name; });
        REQUIRE(it != cat.end());
        return *it;
    };
    CHECK(get("5O(1)").chern.c == std::vector<Int>{5, 10, 10, 5});
    CHECK(get("4O(1)+T(-1)").chern.c == std::vector<Int>{5, 11, 15, 16});
    CHECK(get("2O(1)+Om(1,2)").chern.c == std::vector<Int>{5, 11, 13, 9});
    CHECK(get("3O(1)+2T(-1)").chern.c == std::vector<Int>{5, 12, 20, 28});
    CHECK(get("O(1)+T(-1)+Om(1,2)").chern.c == std::vector<Int>{5, 12, 18, 21});
    CHECK(get("2O(1)+Om(2,3)").chern.c == std::vector<Int>{5, 12, 18, 15});
    CHECK(get("coker[Om(3,3)->Om(2,2)+Om(1,1)](1)").chern.c == std::vector<Int>{5, 12, 16, 8});
    CHECK(get("coker[Om(3,3)->Om(2,2)+Om(1,1)](1)").rank == 6);
    CHECK(get("O(1)+monad[Om(3,3)->Om(2,2)+Om(1,1)->O](1)").chern.c == std::vector<Int>{5, 12, 16, 8});
    CHECK(get("O(1)+monad[Om(3,3)->Om(2,2)+Om(1,1)->O](1)").rank == 6);
    CHECK(get("P(O(5))").rank == 125);
}

TEST_CASE("catalog values on P^5 and P^6") {
    auto cat5 = named_bundle_catalog(5);
    auto coker = std::find_if(cat5.begin(), cat5.end(), [](const CatalogEntry& e) {
        return e.name == "coker[Om(4,4)->Om(2,2)](1)";
    });
    REQUIRE(coker != cat5.end());
    CHECK(coker->rank == 5);
    CHECK(coker->chern.c_at(2) == 12);
    CHECK(coker->chern.c_at(3) == 16);
    CHECK(coker->chern.c_at(4) == 8);

    auto cat6 = named_bundle_catalog(6);
    auto om12 = std::find_if(cat6.begin(), cat6.end(), [](const CatalogEntry& e) { return e.name == "Om(1,2)"; });
    auto om45 = std::find_if(cat6.begin(), cat6.end(), [](const CatalogEntry& e) { return e.name == "Om(4,5)"; });
    REQUIRE(om12 != cat6.end());
    REQUIRE(om45 != cat6.end());
    CHECK(om12->rank == 6);
    CHECK(om45->rank == 15);
    // Om(4,5) = P(Om(1,2)) at the level of all six Chern classes
    CHECK(p_functor(om12->chern).c == om45->chern.c);
    // and the h^2(E_H^dual) = 1 correction reconciles its rank formula
    auto rf = rank_formula(om45->chern.c_at(2), om45->chern.c_at(3), om45->chern.c_at(4), 1);
    CHECK(rf.integral);
    CHECK(rf.value == om45->rank);

    CHECK_THROWS_AS(named_bundle_catalog(3), std::invalid_argument);
}

TEST_CASE("catalog_h recomputes section counts") {
    auto cat = named_bundle_catalog(4);
    for (const auto& e : cat) {
        if (e.name.find("monad[") != std::string::npos || e.name.rfind("ker[", 0) == 0) {
            // display-level vanishing cannot force H^0 surjectivity of the
            // differential onto O: h^0 and h^1 stay undetermined, never
            // guessed
            CHECK_FALSE(catalog_h(e, 0, 0).has_value());
            CHECK_FALSE(catalog_h(e, 1, 0).has_value());
            for (int q = 2; q <= 4; ++q) CHECK(catalog_h(e, q, 0) == Int(0));
            continue;
        }
        ChernVector c = e.chern;
        c.rank = e.rank;
        Int alternating = 0;
        for (int q = 0; q <= 4; ++q) {
            auto hq = catalog_h(e, q, 0);
            REQUIRE(hq.has_value());
            alternating += (q % 2 == 0) ? *hq : -*hq;
        }
        CHECK(alternating == euler_characteristic(c, 0));
        // higher cohomology at l = 0 vanishes except for P(O(5)), whose
        // h^3 = h^4(O(-5)) = 1
        if (e.name != "P(O(5))")
            for (int q = 1; q <= 4; ++q) CHECK(catalog_h(e, q, 0) == Int(0));
        else
            CHECK(catalog_h(e, 3, 0) == Int(1));
    }
}
