#include <algorithm>

#include "doctest.h"

#include "mdscode/bounds.hpp"
#include "mdscode/constructions.hpp"

using namespace mdscode;

TEST_CASE("divisibility condition") {
    CHECK(divisibility_condition(10, TheoremId::T2_2, 1));   // 3! does not divide 10*8
    CHECK(!divisibility_condition(6, TheoremId::T2_2, 1));   // 3! divides 6*4
    CHECK(divisibility_condition(36, TheoremId::T2_3, 6));   // 5! vs 38*37*36*34 = 1720944
    CHECK(!divisibility_condition(10, TheoremId::T2_3, 9));  // 8! divides 15*14*13*12*11*10*8
    CHECK_THROWS_AS(divisibility_condition(9, TheoremId::T2_2, 1), std::domain_error);
    CHECK_THROWS_AS(divisibility_condition(10, TheoremId::T2_2, 0), std::domain_error);
    CHECK_THROWS_AS(divisibility_condition(10, TheoremId::T2_3, 3), std::domain_error);
    CHECK_THROWS_AS(divisibility_condition(10, TheoremId::T1_3, 1), std::domain_error);
}

TEST_CASE("per-rule bounds") {
    auto b = theorem_bound(TheoremId::T2_1, 10, 9);
    REQUIRE(b);
    CHECK(b->value == 12);

    CHECK(!theorem_bound(TheoremId::T2_1, 8, 7));  // 8 = 2 (mod 6)

    auto t22 = theorem_bound(TheoremId::T2_2, 6, 4);
    REQUIRE(t22);
    CHECK(t22->value == 9);
    CHECK(t22->l_star == 3);

    auto t22b = theorem_bound(TheoremId::T2_2, 8, 6);
    REQUIRE(t22b);
    CHECK(t22b->value == 13);
    CHECK(t22b->l_star == 5);

    auto t13 = theorem_bound(TheoremId::T1_3, 9, 8);
    REQUIRE(t13);
    CHECK(t13->value == 10);

    auto t12b = theorem_bound(TheoremId::T1_2b, 6, 3);
    REQUIRE(t12b);
    CHECK(t12b->value == 6);
    CHECK(!theorem_bound(TheoremId::T1_2b, 8, 3));  // 8 = 0 (mod 4)

    auto trivial = theorem_bound(TheoremId::Trivial, 7, 5);
    REQUIRE(trivial);
    CHECK(trivial->value == 11);

    CHECK_THROWS_AS(theorem_bound(TheoremId::Trivial, 2, 1), std::domain_error);
    CHECK_THROWS_AS(theorem_bound(TheoremId::Trivial, 1, 2), std::domain_error);
}

TEST_CASE("aggregate bounds match the headline values") {
    auto a = aggregate_bound(10, 9);
    CHECK(a.value == 12);
    CHECK(a.achieved_by() == std::vector<TheoremId>{TheoremId::T2_1});

    auto b = aggregate_bound(10, 8);
    CHECK(b.value == 11);
    CHECK(b.achieved_by() == std::vector<TheoremId>{TheoremId::T2_2});
    CHECK(b.l_star == 1);

    auto c = aggregate_bound(6, 4);
    CHECK(c.value == 7);
    CHECK(c.achieved_by() == std::vector<TheoremId>{TheoremId::T1_2a});

    CHECK(aggregate_bound(36, 6).value == 39);
    CHECK(aggregate_bound(36, 7).value == 40);
    auto big = aggregate_bound(216, 214);
    CHECK(big.value <= 219);
    CHECK(big.value == 219);
    CHECK(big.l_star == 3);

    // provenance is sorted by value and never empty
    for (auto [q, k] : {std::pair{5u, 3u}, {12u, 10u}, {9u, 8u}}) {
        auto r = aggregate_bound(q, k);
        REQUIRE(!r.provenance.empty());
        CHECK(std::is_sorted(r.provenance.begin(), r.provenance.end(),
                             [](const auto& x, const auto& y) { return x.value < y.value; }));
        CHECK(r.value <= q + k - 1);  // never worse than the trivial bound
    }
}

TEST_CASE("bound table") {
    auto rows = bound_table(4, 4, 2, 3);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].q == 4);
    CHECK(rows[0].k == 2);
    CHECK(rows[0].value == 5);
    auto by0 = rows[0].achieved_by();
    CHECK(std::find(by0.begin(), by0.end(), TheoremId::T2_2) != by0.end());
    CHECK(rows[0].l_star == 1);
    CHECK(rows[1].k == 3);
    CHECK(rows[1].value == 6);
    auto by1 = rows[1].achieved_by();
    CHECK(std::find(by1.begin(), by1.end(), TheoremId::T2_1) != by1.end());

    auto single = bound_table(3, 3, 2, 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0].value == 4);
    CHECK(single[0].achieved_by().front() == TheoremId::T1_3);
    // a single cell equals the aggregate for that cell
    CHECK(single[0].value == aggregate_bound(3, 2).value);

    CHECK_THROWS_AS(bound_table(5, 4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(bound_table(2, 3, 1, 2), std::domain_error);
}

TEST_CASE("congruence families up to 1000") {
    for (unsigned q = 4; q <= 1000; q += 2) {
        auto t22 = theorem_bound(TheoremId::T2_2, q, q - 2);
        if (q % 6 == 4) {
            REQUIRE(t22);
            CHECK(t22->value == q + 1);
        }
        if (q % 30 == 6 || q % 30 == 26) {
            REQUIRE(t22);
            CHECK(t22->value <= q + 3);
        }
        if (q % 42 == 8 || q % 42 == 36) {
            REQUIRE(t22);
            CHECK(t22->value <= q + 5);
        }
    }
    // the q = 36(5s+1) family fires T2_3 at k = 6 and 7
    for (unsigned s = 0; 36 * (5 * s + 1) <= 1000; ++s) {
        const unsigned q = 36 * (5 * s + 1);
        auto k6 = theorem_bound(TheoremId::T2_3, q, 6);
        auto k7 = theorem_bound(TheoremId::T2_3, q, 7);
        REQUIRE(k6);
        REQUIRE(k7);
        CHECK(k6->value == q + 3);
        CHECK(k7->value == q + 4);
    }
}

TEST_CASE("T2_2 reports the least firing l") {
    for (unsigned q = 4; q <= 200; q += 2) {
        auto bound = theorem_bound(TheoremId::T2_2, q, q - 2);
        if (!bound) continue;
        REQUIRE(bound->l_star);
        const unsigned l_star = *bound->l_star;
        CHECK(bound->value == q + l_star);
        CHECK(divisibility_condition(q, TheoremId::T2_2, l_star));
        for (unsigned l = 1; l < l_star; ++l) CHECK(!divisibility_condition(q, TheoremId::T2_2, l));
    }
}

TEST_CASE("bounds are sound for every constructed fixture") {
    for (const Code& code : fixture_suite(8)) {
        auto report = verify_mds(code);
        REQUIRE(report.is_mds);
        if (*report.k < 2) continue;  // the bound calculus starts at k = 2
        CHECK(code.length() <= aggregate_bound(code.q(), *report.k).value);
    }
}
