#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "mdscode/code.hpp"
#include "mdscode/constructions.hpp"

using namespace mdscode;

namespace {

Code parity3_over_z2() { return build(ConstructionSpec::parity(AlphabetSpec::cyclic(2), 3)); }

Code hexacode() { return build(ConstructionSpec::doubly_extended_rs(AlphabetSpec::field(2, 2), 3)); }

std::multiset<unsigned> distance_multiset(const Code& c) {
    std::multiset<unsigned> out;
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) out.insert(hamming_distance(w[i], w[j]));
    return out;
}

// deterministic equivalence from a seeded generator
Equivalence random_equivalence(unsigned n, unsigned q, unsigned seed) {
    std::mt19937 rng(seed);
    Equivalence e = Equivalence::identity(n, q);
    std::shuffle(e.sigma.begin(), e.sigma.end(), rng);
    for (auto& pi : e.pis) std::shuffle(pi.begin(), pi.end(), rng);
    return e;
}

} // namespace

TEST_CASE("hamming distance and weight") {
    CHECK(hamming_distance({0, 0, 0}, {0, 0, 0}) == 0);
    CHECK(hamming_distance({1, 1, 0, 2, 0}, {1, 1, 0, 0, 3}) == 2);
    CHECK(hamming_distance({0, 1, 1}, {1, 0, 1}) == 2);
    CHECK_THROWS_AS(hamming_distance({0, 1}, {0, 1, 2}), std::invalid_argument);
    CHECK(weight({1, 1, 0, 2, 0}) == 3);
}

TEST_CASE("support and co-support") {
    const Codeword u{1, 1, 0, 2, 0};
    CHECK(support(u) == std::vector<unsigned>{0, 1, 3});
    CHECK(co_support(u) == std::vector<unsigned>{2, 4});
    CHECK(support(Codeword(5, 0)).empty());
    CHECK(co_support(Codeword{1, 2, 3, 1}).empty());
    CHECK(support(u).size() == weight(u));
}

TEST_CASE("weight profiles") {
    const Codeword u{1, 1, 0, 2, 0, 3};
    const Partition two = Partition::leading(6, {3, 3});
    CHECK(weight_profile(u, two) == WeightProfile{2, 2});
    CHECK(weight_profile(Codeword(6, 0), two) == WeightProfile{0, 0});
    const Partition one = Partition::leading(6, {6});
    CHECK(weight_profile(u, one) == WeightProfile{weight(u)});
    CHECK_THROWS_AS(weight_profile(Codeword(4, 0), two), std::invalid_argument);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition(4, {{0, 1}, {1, 2, 3}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(Partition(4, {{0, 1}, {3}}), std::invalid_argument);        // gap
    CHECK_THROWS_AS(Partition(4, {{0, 1, 2, 3}, {}}), std::invalid_argument);   // empty part
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2, 3}}), std::invalid_argument);       // out of range
}

TEST_CASE("min distance") {
    auto z2 = make_alphabet(AlphabetSpec::cyclic(2));
    Code parity(z2, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(min_distance(parity) == 2);

    Code repetition = build(ConstructionSpec::repetition(AlphabetSpec::cyclic(3), 3));
    CHECK(min_distance(repetition) == 3);

    CHECK(min_distance(hexacode()) == 4);

    Code single(z2, 3, {{0, 0, 0}});
    CHECK_THROWS_AS(min_distance(single), std::invalid_argument);
}

TEST_CASE("verify_mds accepts and rejects") {
    auto report = verify_mds(parity3_over_z2());
    CHECK(report.is_mds);
    CHECK(report.k == 2);
    CHECK(report.d == 2);

    auto z2 = make_alphabet(AlphabetSpec::cyclic(2));
    Code broken(z2, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
    auto bad = verify_mds(broken);
    CHECK(!bad.is_mds);
    REQUIRE(bad.witness);
    CHECK(hamming_distance(bad.witness->first, bad.witness->second) == 1);
    CHECK((bad.witness->first == Codeword{1, 1, 1} || bad.witness->second == Codeword{1, 1, 1}));

    // size that is not a power of q
    Code odd_size(z2, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
    auto mismatch = verify_mds(odd_size);
    CHECK(!mismatch.is_mds);
    CHECK(!mismatch.k);
    CHECK(mismatch.reason.find("q^k") != std::string::npos);

    auto ext_rs = build(ConstructionSpec::extended_rs(AlphabetSpec::field(2, 2), 2));
    auto ext_report = verify_mds(ext_rs);
    CHECK(ext_report.is_mds);
    CHECK(ext_report.n == 5);
    CHECK(ext_report.d == 4);
}

TEST_CASE("normalize_contains_zero") {
    auto z3 = make_alphabet(AlphabetSpec::cyclic(3));
    Code shifted(z3, 2, {{1, 1}, {2, 0}});
    Code normalized = normalize_contains_zero(shifted);
    CHECK(normalized.words() == std::vector<Codeword>{{0, 0}, {1, 2}});

    // already containing zero: identity
    Code parity = parity3_over_z2();
    CHECK(normalize_contains_zero(parity).words() == parity.words());

    // linear base translated by a constant word comes back unchanged
    Code rs = build(ConstructionSpec::rs(AlphabetSpec::field(3, 1), 2, 3));
    const Codeword t{1, 2, 1};
    std::vector<Codeword> moved;
    for (const auto& w : rs.words()) {
        Codeword v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = rs.alphabet().add(w[i], t[i]);
        moved.push_back(v);
    }
    Code translated(rs.alphabet_ptr(), rs.length(), std::move(moved));
    CHECK(normalize_contains_zero(translated).words() == rs.words());
    CHECK(distance_multiset(translated) == distance_multiset(rs));
}

TEST_CASE("apply_equivalence") {
    Code parity = parity3_over_z2();
    CHECK(apply_equivalence(parity, Equivalence::identity(3, 2)).words() == parity.words());

    Equivalence swap = Equivalence::identity(3, 2);
    std::swap(swap.sigma[0], swap.sigma[2]);
    CHECK(apply_equivalence(parity, swap).words() == parity.words());  // parity code is symmetric

    Code ext_rs = build(ConstructionSpec::extended_rs(AlphabetSpec::field(2, 2), 2));
    for (unsigned seed : {7u, 19u, 23u}) {
        Code image = apply_equivalence(ext_rs, random_equivalence(5, 4, seed));
        CHECK(image.size() == ext_rs.size());
        CHECK(distance_multiset(image) == distance_multiset(ext_rs));
        CHECK(verify_mds(image).is_mds);
    }

    Equivalence malformed = Equivalence::identity(3, 2);
    malformed.sigma[0] = 2;  // not a permutation anymore
    CHECK_THROWS_AS(apply_equivalence(parity, malformed), std::invalid_argument);
}

TEST_CASE("count_fixed on the (6,4^3,4) code") {
    Code code = hexacode();
    CHECK(count_fixed(code, {{0, 0}, {1, 0}}) == 4);  // q^{k-2}
    CHECK(count_fixed(code, {{0, 1}, {1, 2}}) == 4);
    CHECK(count_fixed(code, {{0, 0}, {1, 0}, {2, 0}}) == 1);  // k coordinates pin the word
    CHECK_THROWS_AS(count_fixed(code, {{0, 0}, {0, 1}}), std::invalid_argument);

    // summing the weight-filtered counts over all nonzero (a, b) gives the
    // profile count for (2, 2) under {1,2}|{3..6}
    const Partition t = Partition::leading(6, {2, 4});
    std::size_t total = 0;
    for (Symbol a = 1; a < 4; ++a)
        for (Symbol b = 1; b < 4; ++b) total += count_fixed(code, {{0, a}, {1, b}}, 4);
    CHECK(total == count_fixed(code, {}, t, {2, 2}));
    CHECK(total == 18);
}

TEST_CASE("max_agreement") {
    CHECK(max_agreement(parity3_over_z2()) == 1);  // k - 1
    CHECK(max_agreement(hexacode()) == 2);
    CHECK(max_agreement(build(ConstructionSpec::repetition(AlphabetSpec::cyclic(3), 4))) == 0);
}

TEST_CASE("metric axioms on deterministic random triples") {
    auto z6 = make_alphabet(AlphabetSpec::cyclic(6));
    std::mt19937 rng(2024);
    std::uniform_int_distribution<unsigned> sym(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Codeword u(7), v(7), w(7);
        for (unsigned i = 0; i < 7; ++i) {
            u[i] = static_cast<Symbol>(sym(rng));
            v[i] = static_cast<Symbol>(sym(rng));
            w[i] = static_cast<Symbol>(sym(rng));
        }
        CHECK(hamming_distance(u, u) == 0);
        CHECK(hamming_distance(u, v) == hamming_distance(v, u));
        CHECK(hamming_distance(u, w) <= hamming_distance(u, v) + hamming_distance(v, w));
        if (u != v) CHECK(hamming_distance(u, v) > 0);
    }
    (void)z6;
}

namespace {

// independent brute force: enumerate every subset of the candidate list
// (weight-w words with support containing the anchor) and keep the
// largest whose supports pairwise meet exactly in the anchor
std::size_t oracle_family_size(const Code& code, const std::vector<unsigned>& anchor, unsigned w) {
    std::vector<std::vector<unsigned>> supports;
    for (const auto& word : code.words()) {
        if (weight(word) != w) continue;
        auto s = support(word);
        if (std::includes(s.begin(), s.end(), anchor.begin(), anchor.end())) supports.push_back(s);
    }
    const std::size_t c = supports.size();
    REQUIRE(c <= 20);
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < c; ++i)
            if (mask & (std::size_t{1} << i)) members.push_back(i);
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < members.size() && ok; ++b) {
                std::vector<unsigned> inter;
                std::set_intersection(supports[members[a]].begin(), supports[members[a]].end(),
                                      supports[members[b]].begin(), supports[members[b]].end(),
                                      std::back_inserter(inter));
                ok = (inter == anchor);
            }
        }
        if (ok) best = std::max(best, members.size());
    }
    return best;
}

} // namespace

TEST_CASE("max_common_support_family") {
    auto z2 = make_alphabet(AlphabetSpec::cyclic(2));
    Code empty(z2, 3, {});
    auto none = max_common_support_family(empty, {0}, 2);
    CHECK(none.size == 0);
    CHECK(none.members.empty());

    Code code = hexacode();
    const std::vector<unsigned> anchor{0, 1};
    auto family = max_common_support_family(code, anchor, 4);
    CHECK(family.size == oracle_family_size(code, anchor, 4));
    CHECK(family.size == 2);

    // support packing on the returned family: members differ everywhere
    // outside the anchor, so the stripped supports fit disjointly
    std::size_t stripped_total = 0;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        auto si = support(family.members[i]);
        stripped_total += si.size() - anchor.size();
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            auto sj = support(family.members[j]);
            std::vector<unsigned> inter;
            std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                  std::back_inserter(inter));
            CHECK(inter == anchor);
        }
    }
    CHECK(stripped_total <= code.length() - anchor.size());

    // weight-5 words with a 3-coordinate anchor: none exist here, and the
    // even-q family cap (q-2)/2 holds vacuously
    auto none5 = max_common_support_family(code, {0, 1, 2}, 5);
    CHECK(none5.size <= (code.q() - 2) / 2);

    // 45 weight-4 words share the empty anchor: exceeds the exact-search budget
    CHECK_THROWS_AS(max_common_support_family(code, {}, 4), BudgetExceeded);
}

TEST_CASE("max_agreement equals n minus min distance, k-1 on MDS codes") {
    for (const Code& code : fixture_suite(4)) {
        if (code.size() < 2) continue;
        auto report = verify_mds(code);
        REQUIRE(report.is_mds);
        CHECK(max_agreement(code) == code.length() - min_distance(code));
        CHECK(max_agreement(code) == *report.k - 1);
    }
}

TEST_CASE("orthogonal array projections for small fixtures") {
    for (const Code& code : fixture_suite(5)) {
        if (code.length() > 7) continue;
        auto report = verify_mds(code);
        REQUIRE(report.is_mds);
        const unsigned k = *report.k;
        const unsigned n = code.length();
        // every m <= k coordinates, every assignment: exactly q^{k-m} words
        std::vector<unsigned> coords;
        for (unsigned m = 1; m <= k; ++m) {
            coords.assign(m, 0);
            // enumerate m-subsets of {0..n-1}
            std::vector<unsigned> subset(m);
            for (unsigned i = 0; i < m; ++i) subset[i] = i;
            while (true) {
                std::map<Codeword, std::size_t> histogram;
                for (const auto& w : code.words()) {
                    Codeword projection(m);
                    for (unsigned i = 0; i < m; ++i) projection[i] = w[subset[i]];
                    ++histogram[projection];
                }
                std::size_t expected = 1;
                for (unsigned i = m; i < k; ++i) expected *= code.q();
                std::size_t cells = 1;
                for (unsigned i = 0; i < m; ++i) cells *= code.q();
                CHECK(histogram.size() == cells);
                for (const auto& [cell, count] : histogram) CHECK(count == expected);
                // same fact through count_fixed with the all-zero assignment
                Assignments zeros;
                for (unsigned i : subset) zeros.emplace_back(i, 0);
                CHECK(count_fixed(code, zeros) == expected);
                // next m-subset
                int pos = static_cast<int>(m) - 1;
                while (pos >= 0 && subset[pos] == n - m + pos) --pos;
                if (pos < 0) break;
                ++subset[pos];
                for (unsigned i = pos + 1; i < m; ++i) subset[i] = subset[i - 1] + 1;
            }
        }
    }
}
