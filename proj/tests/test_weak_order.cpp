#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ptl/weak_order.hpp"

using namespace ptl;

TEST_CASE("inversions follow the position-of-values convention") {
    CHECK(inversions(parse_perm("41325")).pairs() ==
          std::vector<Pair>{{1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(inversions(parse_perm("12345")).size() == 0);
    CHECK(inversions(parse_perm("321")).pairs() == std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("Lehmer codes") {
    CHECK(lehmer_code(parse_perm("41325")) == std::vector<int>{1, 2, 1, 0});
    CHECK(lehmer_code(identity_perm(5)) == std::vector<int>{0, 0, 0, 0});
    CHECK(lehmer_code(longest_perm(5)) == std::vector<int>{4, 3, 2, 1});
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_perms(n)) {
            REQUIRE(from_lehmer(lehmer_code(p)) == p);
            auto inv = inversions(p);
            REQUIRE(is_transitive(inv));
            REQUIRE(is_cotransitive(inv));
            REQUIRE(perm_from_inversions(inv) == p);
        }
}

TEST_CASE("weak order comparisons") {
    CHECK(weak_leq(identity_perm(4), parse_perm("3142")));
    // With inversions read on values, 213 < 231 and 132 < 312.
    CHECK(weak_leq(parse_perm("213"), parse_perm("231")));
    CHECK(weak_leq(parse_perm("132"), parse_perm("312")));
    CHECK_FALSE(weak_leq(parse_perm("231"), parse_perm("213")));
    CHECK_FALSE(weak_leq(parse_perm("213"), parse_perm("132")));
}

TEST_CASE("meet and join agree with the Hasse diagram") {
    auto [m, j] = lattice_meet_join(parse_perm("213"), parse_perm("132"));
    CHECK(format_perm(m) == "123");
    CHECK(format_perm(j) == "321");
    for (int n = 1; n <= 5; ++n) {
        auto w = oracle::weak_order(n);
        auto poset = oracle::from_covers(w.up);
        int N = static_cast<int>(w.perms.size());
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                REQUIRE(bool(poset.leq[a][b]) == weak_leq(w.perms[a], w.perms[b]));
                auto [mm, jj] = lattice_meet_join(w.perms[a], w.perms[b]);
                REQUIRE(w.index[mm] == *oracle::meet(poset, a, b));
                REQUIRE(w.index[jj] == *oracle::join(poset, a, b));
            }
    }
}

TEST_CASE("cover relations are right multiplications by adjacent transpositions") {
    for (const auto& p : all_perms(5))
        for (const auto& q : up_covers(p)) CHECK(length(q) == length(p) + 1);
}

TEST_CASE("reduced words") {
    auto w = reduced_words(parse_perm("321"));
    CHECK(w == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
    CHECK(reduced_words(identity_perm(4)) == std::vector<Word>{{}});
    auto w0 = reduced_words(longest_perm(4));
    CHECK(w0.size() == 16);
    for (const auto& x : w0) CHECK(is_reduced_word_of(x, longest_perm(4)));
    CHECK_THROWS_AS(reduced_words(identity_perm(9)), CapError);
}

TEST_CASE("fixed pattern avoidance matches a triple scan") {
    auto p = parse_perm("42135");
    CHECK(avoids_fixed_pattern(p, 2, PatternKind::jki));
    CHECK(avoids_fixed_pattern(p, 3, PatternKind::jki));
    CHECK(avoids_fixed_pattern(p, 4, PatternKind::jki));
    CHECK_FALSE(avoids_fixed_pattern(p, 3, PatternKind::kij));
    CHECK_FALSE(avoids_fixed_pattern(parse_perm("4231"), 2, PatternKind::jki));
    CHECK_THROWS_AS(avoids_fixed_pattern(p, 1, PatternKind::jki), ValidationError);
    for (int n = 3; n <= 6; ++n)
        for (const auto& q : all_perms(n))
            for (int j = 2; j < n; ++j) {
                REQUIRE(avoids_fixed_pattern(q, j, PatternKind::jki) == !oracle::contains_jki(q, j));
                REQUIRE(avoids_fixed_pattern(q, j, PatternKind::kij) == !oracle::contains_kij(q, j));
            }
}

TEST_CASE("serialization") {
    CHECK(format_perm(parse_perm("2,1,3")) == "213");
    Perm big = identity_perm(10);
    CHECK(format_perm(big) == "1,2,3,4,5,6,7,8,9,10");
    CHECK(parse_perm(format_perm(big)) == big);
    CHECK_THROWS_AS(parse_perm("1123"), ValidationError);
}
