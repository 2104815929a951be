#include <set>

#include "doctest.h"

#include "motzperm/algebra.hpp"
#include "motzperm/error.hpp"
#include "motzperm/permutation.hpp"
#include "oracles.hpp"

using namespace motzperm;

namespace {
Permutation P(const char* text) { return Permutation::parse(text); }
}  // namespace

TEST_CASE("parse and format") {
    CHECK(P("3 2 1").to_string() == "3 2 1");
    CHECK(P("").size() == 0);
    CHECK(P("  1   2 ").to_string() == "1 2");
    CHECK_THROWS_AS(P("2 2 1"), ParseError);
    CHECK_THROWS_AS(P("1 4 2"), ParseError);
    CHECK_THROWS_AS(P("1 x"), ParseError);
    CHECK_THROWS_AS(P("0 1"), ParseError);
    try {
        P("2 2 1");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(e.code() == ErrorCode::parse);
    }
    CHECK_THROWS_AS(Permutation::from_images({1, 1}), InvalidArgument);
}

TEST_CASE("statistics on small permutations") {
    CHECK(inv_count(Permutation::identity(5)) == 0);
    CHECK(inv_count(P("3 2 1")) == 3);
    CHECK(inv_count(P("2 3 1")) == 2);

    CHECK(depth(Permutation::identity(4)) == 0);
    CHECK(depth(P("3 2 1")) == 2);
    CHECK(depth(P("2 1")) == 1);

    CHECK(exc_count(Permutation::identity(3)) == 0);
    CHECK(exc_count(P("2 3 1")) == 2);
    CHECK(exc_count(P("3 2 1")) == 1);

    CHECK(fix_count(Permutation::identity(4)) == 4);
    CHECK(fix_count(P("3 2 1")) == 1);
    CHECK(fix_count(P("2 3 1")) == 0);

    CHECK(statistics(P("3 2 1")) == PermutationStats{3, 1, 1, 2});
    CHECK(statistics(Permutation{}) == PermutationStats{});
}

TEST_CASE("inverse") {
    CHECK(P("2 3 1").inverse() == P("3 1 2"));
    CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
    for_each_permutation(6, [](const Permutation& s) { CHECK(s.inverse().inverse() == s); });
}

TEST_CASE("statistics agree with independent oracles") {
    for (int n = 0; n <= 7; ++n) {
        for_each_permutation(n, [](const Permutation& s) {
            REQUIRE(inv_count(s) == oracle::inv(s));
            REQUIRE(depth(s) == oracle::depth(s));
            REQUIRE(exc_count(s) == oracle::exc(s));
            REQUIRE(fix_count(s) == oracle::fix(s));
        });
    }
}

TEST_CASE("depth via factorization") {
    CHECK(depth_via_factorization(Permutation::identity(4)) == 0);
    CHECK(depth_via_factorization(P("2 1")) == 1);
    CHECK(depth_via_factorization(P("3 2 1")) == 2);
    CHECK(depth_via_factorization(Permutation{}) == 0);
    CHECK_THROWS_AS(depth_via_factorization(Permutation::identity(8)), SizeLimitError);

    for_each_permutation(5, [](const Permutation& s) { CHECK(depth_via_factorization(s) == depth(s)); });
    for (int n = 0; n <= 7; ++n) {
        const auto table = factorization_depth_table(n);
        std::uint64_t mismatches = 0;
        for_each_permutation(n, [&](const Permutation& s) { mismatches += table[lex_rank(s)] != depth(s); });
        CHECK_MESSAGE(mismatches == 0, "n=" << n);
    }
}

TEST_CASE("statistic inequalities and inverse symmetry") {
    for (int n = 0; n <= 8; ++n) {
        for_each_permutation(n, [](const Permutation& s) {
            const auto st = statistics(s);
            REQUIRE(st.exc <= st.depth);
            REQUIRE(st.depth <= st.inv);
            if (s.size() <= 7) {
                REQUIRE(depth(s.inverse()) == st.depth);
                REQUIRE(inv_count(s.inverse()) == st.inv);
            }
        });
    }
}

TEST_CASE("depth distribution sums to n!") {
    for (int n = 0; n <= 8; ++n) {
        MultiPoly gf;
        for_each_permutation(n, [&](const Permutation& s) {
            gf.add_term(Monomial{0, 0, 0, static_cast<std::uint32_t>(depth(s))}, 1);
        });
        CHECK(poly_substitute(gf, {{Var::t, 1}}) == MultiPoly(factorial(static_cast<unsigned>(n))));
    }
}

TEST_CASE("enumeration") {
    CHECK(all_permutations(0).size() == 1);
    CHECK(all_permutations(0)[0].size() == 0);
    CHECK(all_permutations(5).size() == 120);

    const auto d3 = all_derangements(3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == P("2 3 1"));
    CHECK(d3[1] == P("3 1 2"));

    // Derangement numbers and lexicographic order, against filtering S_n.
    for (int n = 1; n <= 8; ++n) {
        std::vector<Permutation> filtered;
        for_each_permutation(n, [&](const Permutation& s) {
            if (fix_count(s) == 0) filtered.push_back(s);
        });
        CHECK(all_derangements(n) == filtered);
    }
    CHECK(all_derangements(9).size() == 133496);

    const auto perms = all_permutations(6);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    CHECK_THROWS_AS(for_each_permutation(13, [](const Permutation&) {}), SizeLimitError);
    CHECK_THROWS_AS(for_each_derangement(13, [](const Permutation&) {}), SizeLimitError);
}

TEST_CASE("alternating permutations") {
    CHECK(is_alternating(P("2 1 3")));
    CHECK(is_alternating(P("3 1 4 2")));
    CHECK_FALSE(is_alternating(P("1 2")));
    CHECK(is_alternating(Permutation{}));
    CHECK(is_alternating(P("1")));
    int count = 0;
    for_each_permutation(4, [&](const Permutation& s) { count += is_alternating(s); });
    CHECK(count == 5);
}

TEST_CASE("lexicographic rank round trip") {
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t expected = 0;
        for_each_permutation(n, [&](const Permutation& s) {
            REQUIRE(lex_rank(s) == expected);
            REQUIRE(lex_unrank(n, expected) == s);
            ++expected;
        });
    }
}
