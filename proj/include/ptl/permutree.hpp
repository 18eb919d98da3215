#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptl/weak_order.hpp"

namespace ptl {

enum class Sym : unsigned char { none, down, up, updown };

inline bool has_down(Sym s) { return s == Sym::down || s == Sym::updown; }
inline bool has_up(Sym s) { return s == Sym::up || s == Sym::updown; }
char sym_letter(Sym s);

struct Decoration {
    std::vector<Sym> sym;  // sym[i-1] decorates node i
    bool normalized_warning = false;

    int n() const { return static_cast<int>(sym.size()); }
    Sym at(int i) const { return sym[i - 1]; }
    std::string to_string() const;

    // Letters n/d/u/x; the end positions are forced to none.
    static Decoration parse(const std::string& letters);
    static Decoration from(std::vector<Sym> s);
    static Decoration uniform(int n, Sym s);

    bool operator==(const Decoration& o) const { return sym == o.sym; }
};

// All normalized decorations of size n, in n/d/u/x lexicographic order.
std::vector<Decoration> all_decorations(int n);
// Decorations over a restricted alphabet for the inner positions.
std::vector<Decoration> all_decorations(int n, const std::vector<Sym>& alphabet);

// Slots hold a node label, 0 for a boundary string, -1 when the slot does not exist.
// Nodes with a down symbol use child[0]=LD, child[1]=RD; otherwise child[0]=D.
// Nodes with an up symbol use parent[0]=LA, parent[1]=RA; otherwise parent[0]=A.
struct Permutree {
    Decoration delta;
    std::vector<std::array<int, 2>> child, parent;  // indexed 1..n

    int n() const { return delta.n(); }
    int child_arity(int i) const { return has_down(delta.at(i)) ? 2 : 1; }
    int parent_arity(int i) const { return has_up(delta.at(i)) ? 2 : 1; }
    // Internal edges (x,y) meaning x -> y, i.e. x is a child of y.
    std::vector<Pair> edges() const;
    // Internal edges plus boundary strings.
    int edge_count() const;
};

Permutree insert(const Perm& p, const Decoration& delta);
// Structural checks: arity, label separation, tree shape, edge-count formula.
void check_permutree(const Permutree& t);

bool is_linear_extension(const Permutree& t, const Perm& p);
std::vector<Perm> linear_extensions(const Permutree& t);

// Descendant relation: desc[x][y] true when y is a strict descendant of x.
std::vector<std::vector<char>> descendants(const Permutree& t);

// Rotation of the edge i -> j with i < j.
Permutree rotate(const Permutree& t, int i, int j);

// Vertex set (as bitmask, bit v-1 for node v) of the child side of every internal edge.
std::vector<std::uint32_t> edge_cuts(const Permutree& t);
std::uint32_t edge_cut(const Permutree& t, int i, int j);

// Component of t minus node i reached through the given neighbour (bitmask); 0 if none.
std::uint32_t component_through(const Permutree& t, int i, int neighbour);

struct RotationLattice {
    std::vector<Permutree> elems;   // elems[0] is the bottom
    std::vector<PairSet> keys;      // inversion sets
    std::vector<std::vector<int>> up;  // cover relations, by index
    std::map<PairSet, int> index;
    int find(const PairSet& key) const;
};

RotationLattice rotation_lattice(const Decoration& delta, int cap = -1);

unsigned long long count_permutrees(const Decoration& delta);

std::vector<int> permutreehedron_vertex(const Permutree& t);
// The orientation direction (n-1, n-3, ..., -n+1).
std::vector<int> permutreehedron_direction(int n);

}  // namespace ptl
