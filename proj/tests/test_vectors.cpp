#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ptl/vectors.hpp"

using namespace ptl;

namespace {
PairSet pairs_of(int n, std::vector<Pair> ps) {
    PairSet e(n);
    for (auto [i, j] : ps) e.add(i, j);
    return e;
}
}  // namespace

TEST_CASE("inversion sets of a small lattice") {
    auto lat = rotation_lattice(Decoration::parse("nxun"));
    CHECK(lat.keys.front().size() == 0);
    bool top = false, mid = false;
    for (const auto& k : lat.keys) {
        top = top || k.size() == 6;
        mid = mid || k == pairs_of(4, {{2, 4}, {3, 4}});
    }
    CHECK(top);
    CHECK(mid);
}

TEST_CASE("reconstruction from an inversion set") {
    auto d = Decoration::parse("dunxndu");
    auto e = pairs_of(7, {{1, 2}, {3, 4}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
    CHECK_FALSE(check_inversion_set(e, d).has_value());
    auto t = permutree_from_inversion_set(e, d);
    check_permutree(t);
    CHECK(inversion_set(t) == e);
    CHECK(inversion_set(permutree_from_inversion_set(PairSet(7), d)) == PairSet(7));
    CHECK(inversion_set(permutree_from_inversion_set(PairSet(7), d)) ==
          inversion_set(insert(identity_perm(7), d)));

    auto bad = pairs_of(3, {{1, 3}});
    auto v = check_inversion_set(bad, Decoration::parse("nnn"));
    REQUIRE(v.has_value());
    CHECK(v->condition == "cotransitivity");
    CHECK((v->i == 1 && v->j == 2 && v->k == 3));
    // (2,3) without (1,2) forces (1,3) out when 2 is down.
    auto down_bad = pairs_of(3, {{2, 3}, {1, 3}});
    CHECK(check_inversion_set(down_bad, Decoration::from({Sym::none, Sym::down, Sym::none}))->condition ==
          "down condition");
    CHECK_THROWS_AS(permutree_from_inversion_set(down_bad, Decoration::parse("ndn")), ValidationError);
}

TEST_CASE("round trip through inversion sets for every permutree") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : all_decorations(n))
            for (const auto& t : rotation_lattice(d).elems) {
                auto e = inversion_set(t);
                REQUIRE_FALSE(check_inversion_set(e, d).has_value());
                REQUIRE(inversion_set(permutree_from_inversion_set(e, d)) == e);
            }
}

TEST_CASE("valid sets are exactly the permutree inversion sets") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : all_decorations(n)) {
            auto lat = rotation_lattice(d);
            std::vector<Pair> all;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
            int valid = 0;
            for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
                PairSet e(n);
                for (size_t k = 0; k < all.size(); ++k)
                    if (mask >> k & 1) e.add(all[k].first, all[k].second);
                if (!check_inversion_set(e, d)) {
                    ++valid;
                    REQUIRE(lat.find(e) >= 0);
                }
            }
            REQUIRE(valid == static_cast<int>(lat.elems.size()));
        }
}

TEST_CASE("meet via inversion sets") {
    auto d = Decoration::parse("uxndd");
    CHECK_FALSE(check_inversion_set(pairs_of(5, {{2, 4}, {3, 4}}), d).has_value());
    for (int n = 1; n <= 5; ++n)
        for (const auto& dd : all_decorations(n)) {
            auto lat = rotation_lattice(dd);
            auto poset = oracle::from_covers(lat.up);
            int N = static_cast<int>(lat.elems.size());
            for (int a = 0; a < N; ++a) {
                REQUIRE(inversion_set(meet_via_inversions(lat.elems[a], lat.elems[a])) == lat.keys[a]);
                for (int b = a + 1; b < N; ++b) {
                    auto m = meet_via_inversions(lat.elems[a], lat.elems[b]);
                    REQUIRE(lat.find(inversion_set(m)) == *oracle::meet(poset, a, b));
                }
            }
        }
}

TEST_CASE("covers add one pair and close transitively") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto lat = rotation_lattice(d);
            for (size_t k = 0; k < lat.elems.size(); ++k)
                for (auto [x, y] : lat.elems[k].edges()) {
                    if (x > y) continue;
                    auto e = lat.keys[k];
                    e.add(x, y);
                    REQUIRE(transitive_closure(e) == inversion_set(rotate(lat.elems[k], x, y)));
                }
        }
}

TEST_CASE("cubic vectors") {
    auto d = Decoration::parse("nxn");
    auto t = insert(parse_perm("213"), d);
    CHECK(inversion_vector(t) == std::vector<int>{1, 0});
    CHECK(cubic_vector(t) == std::vector<int>{2, 0});

    auto d7 = Decoration::parse("dunxndu");
    std::vector<int> corner{6, 0, 0, 0, 2, 1};
    CHECK(cubic_vector(extremal_permutree(d7, corner)) == corner);
    CHECK(inversion_set(extremal_permutree(d7, std::vector<int>(6, 0))).size() == 0);
    CHECK_THROWS_AS(extremal_permutree(d7, {1, 0, 0, 0, 0, 0}), ValidationError);

    for (const auto& p : all_perms(6))
        REQUIRE(cubic_vector(insert(p, Decoration::uniform(6, Sym::none))) == lehmer_code(p));
}

TEST_CASE("cubical embedding is injective with axis-parallel edges") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& d : all_decorations(n)) {
            auto lat = rotation_lattice(d);
            std::set<std::vector<int>> seen;
            for (size_t k = 0; k < lat.elems.size(); ++k) {
                auto c = cubic_vector(lat.elems[k]);
                bool on_surface = n == 1;
                for (int i = 1; i < n; ++i) {
                    REQUIRE(c[i - 1] >= 0);
                    REQUIRE(c[i - 1] <= n - i);
                    on_surface = on_surface || c[i - 1] == 0 || c[i - 1] == n - i;
                }
                REQUIRE(on_surface);
                seen.insert(c);
                for (int u : lat.up[k]) {
                    auto c2 = cubic_vector(lat.elems[u]);
                    int changed = 0;
                    for (int i = 0; i + 1 < n; ++i)
                        if (c2[i] != c[i]) {
                            ++changed;
                            REQUIRE(c2[i] > c[i]);
                        }
                    REQUIRE(changed == 1);
                }
            }
            REQUIRE(seen.size() == lat.elems.size());
            std::set<std::vector<int>> corners;
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<int> r(n - 1);
                for (int i = 1; i < n; ++i) r[i - 1] = (mask >> (i - 1) & 1) ? n - i : 0;
                auto t = extremal_permutree(d, r);
                REQUIRE(cubic_vector(t) == r);
                corners.insert(r);
            }
            REQUIRE(corners.size() == (1u << (n - 1)));
        }
}
