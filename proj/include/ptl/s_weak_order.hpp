#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptl/weak_order.hpp"

namespace ptl {

// s = (s_1, ..., s_n), stored 0-based: s[i-1] = s_i.
using SComp = std::vector<int>;
// Stirling s-permutation as a list of letters.
using SWord = std::vector<int>;

void require_composition(const SComp& s, bool strict);
SComp parse_composition(const std::string& text);
int total(const SComp& s);

unsigned long long count_s_trees(const SComp& s);

// Plane tree: node i has s_i+1 child slots holding a label or 0 for a leaf.
struct STree {
    SComp s;
    std::vector<std::vector<int>> children;  // indexed 1..n, root n
    int n() const { return static_cast<int>(s.size()); }
    std::string to_string() const;
    bool operator==(const STree& o) const { return s == o.s && children == o.children; }
};

// Leaves of the tree in left-to-right order, as (node, slot).
std::vector<std::pair<int, int>> leaves(const STree& t);
std::vector<STree> all_s_trees(const SComp& s);

bool is_stirling(const SWord& w, const SComp& s);
void require_stirling(const SWord& w, const SComp& s);
SWord parse_sword(const std::string& text);
std::string format_sword(const SWord& w);
std::vector<SWord> all_stirling(const SComp& s);
SWord sorted_word(const SComp& s);
SWord reverse_sorted_word(const SComp& s);

SWord tree_to_word(const STree& t);
STree word_to_tree(const SWord& w, const SComp& s);

// Multiplicities |(c,a)| for a < c.
struct InvMultiset {
    int n = 0;
    std::vector<int> m;  // m[(c-1)*n + (a-1)]
    explicit InvMultiset(int n_ = 0) : n(n_), m(static_cast<size_t>(n_) * n_, 0) {}
    int get(int c, int a) const { return m[static_cast<size_t>(c - 1) * n + (a - 1)]; }
    void set(int c, int a, int v) { m[static_cast<size_t>(c - 1) * n + (a - 1)] = v; }
    bool operator==(const InvMultiset&) const = default;
    bool leq(const InvMultiset& o) const;
    std::string to_string() const;
};

InvMultiset inversion_multiset(const SWord& w, const SComp& s);
InvMultiset tree_inversion_multiset(const STree& t);
bool satisfies_transitivity(const InvMultiset& m);
bool satisfies_planarity(const InvMultiset& m, const SComp& s);
SWord word_from_multiset(const InvMultiset& m, const SComp& s);

bool s_leq(const SWord& a, const SWord& b, const SComp& s);

// Block of a: positions of its first and last occurrence (0-based).
std::pair<int, int> block(const SWord& w, int a);
// Ascents (a,c): the a-block is immediately followed by c > a.
std::vector<Pair> ascents(const SWord& w);
SWord transpose_ascent(const SWord& w, Pair ascent);

bool is_A_dependent(const SWord& w, const std::vector<Pair>& A, int a, int c, const SComp& s);
SWord add_ascents(const SWord& w, const std::vector<Pair>& A, const SComp& s);
// Repeated transitive closure along transitivity paths until stable.
InvMultiset multiset_closure(const InvMultiset& m);

struct SHasse {
    std::vector<SWord> elems;  // elems[0] is the sorted word
    std::vector<std::vector<int>> up;
    std::map<SWord, int> index;
};
SHasse s_hasse(const SComp& s, int cap = -1);

struct SFace {
    SWord w;
    std::vector<Pair> A;
};
bool face_contains(const SFace& inner, const SFace& outer, const SComp& s);
std::vector<SFace> all_faces(const SComp& s, int cap = -1);

}  // namespace ptl
