#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptl/weak_order.hpp"

namespace ptl {

enum class StateClass { healthy, ill, dead };
std::string class_name(StateClass c);

// Complete deterministic automaton over the letters s_1..s_{n-1}.
struct Automaton {
    int n = 0;
    int initial = 0;
    std::vector<StateClass> cls;
    std::vector<std::string> label;
    std::vector<std::vector<int>> next;  // next[q][l-1]

    int size() const { return static_cast<int>(cls.size()); }
    int step(int q, int letter) const { return next[q][letter - 1]; }
    int run(const Word& w) const;
    bool accepts(const Word& w) const { return cls[run(w)] != StateClass::dead; }
    // One line "from -letter-> to" per non-loop transition.
    std::string edge_list() const;
};

enum class Side { U, D };

Automaton build_single(Side kind, int j, int n);
Automaton product(const std::vector<int>& U, const std::vector<int>& D, int n);

void require_disjoint(const std::vector<int>& U, const std::vector<int>& D, int n);
// Pattern scan: avoids jki for j in U and kij for j in D.
bool avoids_patterns(const Perm& p, const std::vector<int>& U, const std::vector<int>& D);
bool exists_accepted_word(const Perm& p, const std::vector<int>& U, const std::vector<int>& D);

// Final states of accepted reduced words, for every permutation of size n,
// computed by dynamic programming over the weak order.
std::map<Perm, std::vector<int>> accepted_states(const Automaton& a);
// Word search for a single permutation.
bool search_accepted_word(const Perm& p, const Automaton& a);

// Letter priority: rank[l-1] smaller means preferred. Empty means s_1 < s_2 < ...
using Priority = std::vector<int>;

struct SortStep {
    Perm perm;
    std::vector<int> U, D;
    int letter;
};

struct SortOutcome {
    Word word;
    bool sorted = false;
    Perm residual;
    std::vector<SortStep> trace;
};

SortOutcome algorithm1(const Perm& p, Side kind, int j, const Priority& prio = {});
SortOutcome algorithm2(const Perm& p, const std::vector<int>& U, const std::vector<int>& D,
                       const Priority& prio = {});
// Single-set inputs use the single-automaton algorithm, all others the general one.
SortOutcome permutree_sort(const Perm& p, const std::vector<int>& U, const std::vector<int>& D,
                           const Priority& prio = {});

struct GeneratingTree {
    std::vector<Word> words;  // words[0] is the empty word
    std::vector<Perm> perms;
    std::vector<int> parent;  // -1 for the root
};

GeneratingTree generating_tree(int n, const std::vector<int>& U, const std::vector<int>& D,
                               const Priority& prio = {});

struct CoxeterSort {
    Word word;
    std::vector<std::vector<int>> factors;  // letters taken in each pass through c
    bool sortable = false;
};

void require_coxeter_element(const Word& c, int n);
CoxeterSort coxeter_sort(const Perm& p, const Word& c);
// U_c holds j with s_j before s_{j-1} in c; D_c the remaining j in [2,n-1].
std::pair<std::vector<int>, std::vector<int>> coxeter_sets(const Word& c, int n);

}  // namespace ptl
