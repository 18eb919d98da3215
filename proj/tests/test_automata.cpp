#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ptl/automata.hpp"
#include "ptl/permutree.hpp"

using namespace ptl;

namespace {

// All disjoint pairs (U, D) of subsets of [2, n-1].
std::vector<std::pair<std::vector<int>, std::vector<int>>> disjoint_pairs(int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    int inner = std::max(n - 2, 0);
    int total = 1;
    for (int k = 0; k < inner; ++k) total *= 3;
    for (int code = 0; code < total; ++code) {
        std::vector<int> U, D;
        int c = code;
        for (int j = 2; j <= n - 1; ++j, c /= 3) {
            if (c % 3 == 1) U.push_back(j);
            if (c % 3 == 2) D.push_back(j);
        }
        out.emplace_back(U, D);
    }
    return out;
}

Decoration decoration_of(int n, const std::vector<int>& U, const std::vector<int>& D) {
    std::vector<Sym> s(n, Sym::none);
    for (int u : U) s[u - 1] = Sym::up;
    for (int d : D) s[d - 1] = Sym::down;
    return Decoration::from(s);
}

}  // namespace

TEST_CASE("single automata on the worked words") {
    auto u2 = build_single(Side::U, 2, 3);
    CHECK(u2.accepts({2, 1, 2}));
    CHECK_FALSE(u2.accepts({1, 2, 1}));
    CHECK(u2.accepts({}));
    CHECK(u2.cls[u2.run({})] == StateClass::healthy);
    auto u4 = build_single(Side::U, 4, 6);
    CHECK(u4.accepts({3, 5, 2, 1, 3}));
    CHECK(is_reduced_word_of({3, 5, 2, 1, 3}, parse_perm("413265")));
    CHECK_THROWS_AS(build_single(Side::U, 1, 4), ValidationError);
    CHECK_THROWS_AS(build_single(Side::D, 4, 4), ValidationError);
}

TEST_CASE("product automata") {
    auto all = product({}, {}, 4);
    for (const auto& w : reduced_words(longest_perm(4))) CHECK(all.accepts(w));
    auto both = product({2}, {}, 3);
    auto other = product({}, {2}, 3);
    for (const auto& w : reduced_words(parse_perm("321"))) CHECK_FALSE((both.accepts(w) && other.accepts(w)));
    CHECK_THROWS_AS(exists_accepted_word(parse_perm("321"), {2}, {2}), ValidationError);
    auto p32 = product({3}, {2}, 4);
    for (const auto& p : all_perms(4))
        for (const auto& w : reduced_words(p))
            CHECK(p32.accepts(w) == (build_single(Side::U, 3, 4).accepts(w) &&
                                     build_single(Side::D, 2, 4).accepts(w)));
    CHECK(p32.edge_list().find("-s") != std::string::npos);
}

TEST_CASE("accepted words exist exactly for pattern-avoiding permutations") {
    CHECK(exists_accepted_word(parse_perm("3421"), {2}, {}));
    CHECK_FALSE(exists_accepted_word(parse_perm("4231"), {2}, {}));
    for (int n = 3; n <= 5; ++n)
        for (auto& [U, D] : disjoint_pairs(n)) {
            auto a = product(U, D, n);
            for (const auto& p : all_perms(n)) {
                bool avoid = oracle::is_minimal(p, U, D);
                std::set<int> finals;
                bool any = false;
                for (const auto& w : reduced_words(p)) {
                    bool acc = a.accepts(w);
                    any = any || acc;
                    if (!acc) continue;
                    finals.insert(a.run(w));
                    for (size_t k = 0; k <= w.size(); ++k)
                        REQUIRE(a.accepts(Word(w.begin(), w.begin() + k)));
                }
                REQUIRE(any == avoid);
                REQUIRE(finals.size() <= 1);
                REQUIRE(exists_accepted_word(p, U, D) == avoid);
            }
        }
}

TEST_CASE("sorting algorithms") {
    auto ok = permutree_sort(parse_perm("3421"), {2}, {});
    CHECK(ok.sorted);
    CHECK(ok.word == Word{2, 1, 3, 2, 3});
    CHECK(is_reduced_word_of(ok.word, parse_perm("3421")));
    auto bad = permutree_sort(parse_perm("4231"), {2}, {});
    CHECK_FALSE(bad.sorted);
    CHECK(format_perm(bad.residual) == "1243");
    auto two = permutree_sort(parse_perm("54213"), {2}, {4});
    CHECK(two.sorted);
    CHECK(two.word.front() == 3);
    CHECK(algorithm2(parse_perm("54213"), {2}, {4}).word.front() == 3);

    for (int n = 3; n <= 6; ++n)
        for (auto& [U, D] : disjoint_pairs(n)) {
            auto a = product(U, D, n);
            for (const auto& p : all_perms(n)) {
                bool minimal = oracle::is_minimal(p, U, D);
                for (const auto& out : {algorithm2(p, U, D), permutree_sort(p, U, D)}) {
                    REQUIRE(a.accepts(out.word));
                    REQUIRE(out.sorted == minimal);
                    REQUIRE(is_reduced_word_of(out.word, p) == minimal);
                    Perm check = p;
                    for (int l : out.word) check = swap_values(check, l);
                    REQUIRE(check == out.residual);
                }
            }
        }
}

TEST_CASE("generating trees") {
    auto g = generating_tree(4, {}, {2, 3});
    CHECK(g.words.front().empty());
    CHECK(g.words.size() == 14);
    for (int n = 2; n <= 5; ++n)
        for (auto& [U, D] : disjoint_pairs(n)) {
            auto t = generating_tree(n, U, D);
            REQUIRE(t.words.size() == count_permutrees(decoration_of(n, U, D)));
            std::set<Word> words(t.words.begin(), t.words.end());
            auto a = product(U, D, n);
            for (size_t k = 0; k < t.words.size(); ++k) {
                const auto& w = t.words[k];
                REQUIRE(is_reduced_word_of(w, t.perms[k]));
                REQUIRE(a.accepts(w));
                if (!w.empty()) REQUIRE(words.count(Word(w.begin(), w.end() - 1)));
                // Lexicographically first among accepted reduced words.
                for (const auto& x : reduced_words(t.perms[k]))
                    if (a.accepts(x)) REQUIRE_FALSE(x < w);
            }
        }
}

TEST_CASE("Coxeter sorting") {
    auto r = coxeter_sort(parse_perm("3421"), {2, 1, 3});
    CHECK(r.word == Word{2, 1, 3, 2, 3});
    CHECK(r.sortable);
    auto e = coxeter_sort(identity_perm(4), {1, 2, 3});
    CHECK(e.word.empty());
    CHECK(e.sortable);
    CHECK_THROWS_AS(coxeter_sort(identity_perm(4), {1, 1, 3}), ValidationError);
    for (int n = 2; n <= 6; ++n) {
        Word c;
        for (int l = 1; l < n; ++l) c.push_back(l);
        do {
            auto [U, D] = coxeter_sets(c, n);
            auto a = product(U, D, n);
            int sortable = 0;
            for (const auto& p : all_perms(n)) {
                auto s = coxeter_sort(p, c);
                REQUIRE(is_reduced_word_of(s.word, p));
                bool avoid = oracle::is_minimal(p, U, D);
                REQUIRE(s.sortable == avoid);
                REQUIRE(search_accepted_word(p, a) == avoid);
                REQUIRE(a.accepts(s.word) == avoid);
                REQUIRE(algorithm2(p, U, D).sorted == avoid);
                sortable += s.sortable;
            }
            const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
            REQUIRE(sortable == catalan[n]);
        } while (std::next_permutation(c.begin(), c.end()));
    }
}
