#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "ptl/flows.hpp"
#include "ptl/s_weak_order.hpp"

namespace ptl {

// oru(s) with v_{-1}, v_0, ..., v_n relabeled 0, 1, ..., n+1.
// Edge e^i_t: source edge for 1 <= t < s_i (i in [n+1], s_{n+1} = 2),
// bump for t = 0 and dip for t = s_i (i in [n]).
struct OrugaGraph {
    SComp s;
    FramedGraph g;
    std::vector<std::vector<int>> label;  // label[i][t] = edge id of e^i_t, or -1
    int n() const { return static_cast<int>(s.size()); }
    int s_at(int i) const { return i == n() + 1 ? 2 : s[i - 1]; }
    int edge(int i, int t) const;
    int bump(int i) const { return edge(i, 0); }
    int dip(int i) const { return edge(i, s_at(i)); }
};

OrugaGraph build_oru(const SComp& s);

// R(k, t, delta) with delta[a-1] = delta_a for a < k.
struct OrugaRoute {
    int k = 0, t = 0;
    std::vector<int> delta;
    bool operator==(const OrugaRoute&) const = default;
    auto operator<=>(const OrugaRoute&) const = default;
};

Route route_edges(const OrugaRoute& r, const OrugaGraph& o);
OrugaRoute decode_route(const Route& r, const OrugaGraph& o);
std::vector<OrugaRoute> all_oruga_routes(const SComp& s);
// R[u] for a prefix u of a Stirling s-permutation.
OrugaRoute prefix_route(const SWord& u, const SComp& s);

// Bump flows b_i = f(e^i_0) for i in [n] (b_n = 0), and the full d-flow.
std::vector<long long> word_to_bumps(const SWord& w, const SComp& s);
SWord bumps_to_word(const std::vector<long long>& bumps, const SComp& s);
Flow bumps_to_flow(const std::vector<long long>& bumps, const OrugaGraph& o);
std::vector<long long> flow_to_bumps(const Flow& f, const OrugaGraph& o);
Flow word_to_flow(const SWord& w, const OrugaGraph& o);
SWord flow_to_word(const Flow& f, const OrugaGraph& o);

// Grafting construction; s may contain zeros.
STree bumps_to_tree(const std::vector<long long>& bumps, const SComp& s);
std::vector<long long> tree_to_bumps(const STree& t);

// Delta_w as edge routes in prefix order (length |s|+1) and as indices into `rs`.
std::vector<OrugaRoute> delta_w_routes(const SWord& w, const SComp& s);
Clique delta_w(const SWord& w, const OrugaGraph& o, const std::vector<Route>& rs);

struct AdjacencyPoset {
    std::vector<Clique> cliques;
    std::vector<SWord> words;             // word of each clique through its d-flow
    std::vector<std::vector<int>> up;     // cliques sharing a facet, oriented by rank
};
AdjacencyPoset hasse_from_adjacency(const SComp& s, int cap = -1);

Clique face_simplex(const SFace& f, const OrugaGraph& o, const std::vector<Route>& rs);
// Clique of size |s|-n+2 holding both exceptional routes and one route per proper source edge.
bool is_facet_clique(const Clique& c, const OrugaGraph& o, const std::vector<Route>& rs);

mpq_class oruga_height(const OrugaRoute& r, const SComp& s, const mpq_class& eps);
mpq_class epsilon_bound(const SComp& s);
mpq_class default_epsilon(const SComp& s);

using QVec = std::vector<mpq_class>;

struct RealizationEdge {
    SWord from, to;
    int a = 0, c = 0;
    mpq_class scalar;
};

struct TropicalRealization {
    SComp s;
    mpq_class eps;
    std::map<SWord, QVec> vertices;
    std::vector<RealizationEdge> edges;
    std::vector<std::pair<std::vector<int>, SWord>> support;  // sigma -> w^sigma
    mpq_class coordinate_sum;
};

// Throws ValidationError naming a minimal conflict when eps is not admissible.
TropicalRealization realize(const SComp& s, const mpq_class& eps, int cap = -1);
TropicalRealization realize(const SComp& s, int cap = -1);
QVec vertex_coordinates(const SWord& w, const SComp& s, const mpq_class& eps);
mpq_class edge_scalar(const SWord& w, Pair ascent, const SComp& s, const mpq_class& eps);

struct LidskiiReport {
    mpz_class product, first, second;
    int negative_terms = 0;  // in the second sum
    bool ok() const { return product == first && product == second; }
};
LidskiiReport lidskii_identities(const SComp& s);
// <<m, k>> = binom(m+k-1, k), valid for negative m.
mpz_class multiset_binomial(long m, long k);

}  // namespace ptl
