#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ptl/common.hpp"

namespace ptl {

// One-line notation, values 1..n.
using Perm = std::vector<int>;
using Pair = std::pair<int, int>;

// Set of pairs (i,j) with 1 <= i < j <= n, stored as a dense bit table.
class PairSet {
public:
    PairSet() = default;
    explicit PairSet(int n) : n_(n), bits_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    bool has(int i, int j) const { return bits_[idx(i, j)] != 0; }
    void add(int i, int j) { bits_[idx(i, j)] = 1; }
    void remove(int i, int j) { bits_[idx(i, j)] = 0; }
    int size() const;
    std::vector<Pair> pairs() const;
    bool subset_of(const PairSet& o) const;
    PairSet intersect(const PairSet& o) const;
    PairSet unite(const PairSet& o) const;
    // Pairs not in the set.
    PairSet complement() const;
    std::string to_string() const;

    bool operator==(const PairSet&) const = default;
    auto operator<=>(const PairSet&) const = default;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i - 1) * n_ + (j - 1); }
    int n_ = 0;
    std::vector<char> bits_;
};

bool is_permutation(const Perm& p);
void require_permutation(const Perm& p);
Perm identity_perm(int n);
Perm longest_perm(int n);
Perm inverse(const Perm& p);
Perm parse_perm(const std::string& text);
std::string format_perm(const Perm& p);

// (i,j) with i<j is an inversion when j appears before i.
PairSet inversions(const Perm& p);
int length(const Perm& p);
std::vector<int> lehmer_code(const Perm& p);
Perm from_lehmer(const std::vector<int>& code);

bool is_transitive(const PairSet& e);
bool is_cotransitive(const PairSet& e);
PairSet transitive_closure(const PairSet& e);
// The permutation whose inversion set is e; throws if e is not one.
Perm perm_from_inversions(const PairSet& e);

bool weak_leq(const Perm& a, const Perm& b);
std::pair<Perm, Perm> lattice_meet_join(const Perm& a, const Perm& b);

// Left action swaps the values l and l+1; right action swaps positions i and i+1.
Perm swap_values(const Perm& p, int l);
Perm swap_positions(const Perm& p, int i);
Perm evaluate_word(const Word& w, int n);
bool is_reduced_word_of(const Word& w, const Perm& p);
std::vector<Word> reduced_words(const Perm& p, int cap = -1);

enum class PatternKind { jki, kij };
bool avoids_fixed_pattern(const Perm& p, int j, PatternKind kind);

std::vector<Perm> all_perms(int n);
// Permutations covering p in the weak order.
std::vector<Perm> up_covers(const Perm& p);

}  // namespace ptl
