#include "doctest.h"

#include "mdscode/bounds.hpp"
#include "mdscode/constructions.hpp"
#include "mdscode/search.hpp"
#include "naive_search.hpp"

using namespace mdscode;

namespace {

SearchOutcome run(unsigned n, unsigned q, unsigned k) {
    SearchProblem p;
    p.n = n;
    p.q = q;
    p.k = k;
    return exists_mds(p);
}

} // namespace

TEST_CASE("small existence decisions") {
    auto a = run(3, 2, 2);
    CHECK(a.status == SearchStatus::exists);
    REQUIRE(a.witness);
    auto report = verify_mds(*a.witness);
    CHECK(report.is_mds);
    CHECK(report.n == 3);
    CHECK(report.k == 2);
    CHECK(report.d == 2);

    CHECK(run(4, 2, 2).status == SearchStatus::not_exists);
    CHECK(run(5, 3, 2).status == SearchStatus::not_exists);
    CHECK(run(6, 4, 2).status == SearchStatus::not_exists);
    CHECK(run(7, 4, 3).status == SearchStatus::not_exists);
}

TEST_CASE("witnesses exist wherever constructions build codes") {
    // (n, q, k) realized by rs/extended/doubly-extended/parity fixtures
    for (auto [n, q, k] : {std::tuple{3u, 2u, 2u}, {4u, 3u, 2u}, {4u, 4u, 3u}, {5u, 4u, 2u},
                           {6u, 4u, 3u}, {4u, 3u, 3u}}) {
        auto outcome = run(n, q, k);
        CHECK(outcome.status == SearchStatus::exists);
        REQUIRE(outcome.witness);
        auto report = verify_mds(*outcome.witness);
        CHECK(report.is_mds);
        CHECK(report.k == k);
    }
}

TEST_CASE("agreement with the naive no-symmetry oracle at q = 2") {
    for (unsigned n = 3; n <= 5; ++n) {
        for (unsigned k = 2; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const bool naive = mdscode::testing::naive_exists(n, 2, k);
            const auto reduced = run(n, 2, k).status;
            CHECK(reduced == (naive ? SearchStatus::exists : SearchStatus::not_exists));
        }
    }
    // two ternary spot checks of the same oracle
    CHECK(mdscode::testing::naive_exists(4, 3, 2));
    CHECK(!mdscode::testing::naive_exists(5, 3, 2));
}

TEST_CASE("determinism across runs") {
    auto first = run(6, 4, 3);
    auto second = run(6, 4, 3);
    CHECK(first.status == SearchStatus::exists);
    CHECK(first.nodes == second.nodes);
    REQUIRE(first.witness);
    REQUIRE(second.witness);
    CHECK(first.witness->words() == second.witness->words());

    auto n1 = run(7, 4, 3);
    auto n2 = run(7, 4, 3);
    CHECK(n1.status == SearchStatus::not_exists);
    CHECK(n1.nodes == n2.nodes);
}

TEST_CASE("budget exhaustion reports unknown, never a wrong answer") {
    SearchProblem p;
    p.n = 7;
    p.q = 4;
    p.k = 3;
    p.budget.max_nodes = 50;
    auto outcome = exists_mds(p);
    CHECK(outcome.status == SearchStatus::unknown);
    CHECK(!outcome.witness);

    SearchBudget tiny;
    tiny.max_nodes = 50;
    auto ladder = max_length(4, 3, tiny);
    CHECK(!ladder.certified);
    bool saw_unknown = false;
    for (const auto& [n, status] : ladder.statuses) saw_unknown |= (status == SearchStatus::unknown);
    CHECK(saw_unknown);
}

TEST_CASE("searched lengths never beat the bound calculus") {
    for (auto [q, k] : {std::pair{2u, 2u}, {3u, 2u}, {4u, 2u}, {4u, 3u}}) {
        const unsigned bound = aggregate_bound(q, k).value;
        auto beyond = run(bound + 1, q, k);
        CHECK(beyond.status == SearchStatus::not_exists);
    }
}

TEST_CASE("max_length ladders") {
    auto a = max_length(2, 2);
    CHECK(a.n_max == 3);
    CHECK(a.certified);
    CHECK(a.statuses.at(4) == SearchStatus::not_exists);

    auto b = max_length(3, 2);
    CHECK(b.n_max == 4);
    CHECK(b.certified);
    CHECK(b.statuses.at(5) == SearchStatus::not_exists);

    auto c = max_length(4, 2);
    CHECK(c.n_max == 5);
    CHECK(c.certified);
    CHECK(c.statuses.at(6) == SearchStatus::not_exists);

    // every probed n at or below n_max exists
    for (const auto& [n, status] : c.statuses)
        if (n <= c.n_max) CHECK(status == SearchStatus::exists);
}

TEST_CASE("problem validation") {
    SearchProblem p;
    p.n = 4;
    p.q = 1;
    p.k = 2;
    CHECK_THROWS_AS(exists_mds(p), std::invalid_argument);
    p.q = 3;
    p.k = 1;
    CHECK_THROWS_AS(exists_mds(p), std::invalid_argument);
    p.k = 4;
    CHECK_THROWS_AS(exists_mds(p), std::invalid_argument);
    p.n = 5;
    p.k = 2;
    p.alphabet = AlphabetSpec::cyclic(4);  // order disagrees with q = 3
    CHECK_THROWS_AS(exists_mds(p), std::invalid_argument);
}
