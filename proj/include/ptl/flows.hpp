#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptl/common.hpp"

namespace ptl {

struct Edge {
    int id = 0, tail = 0, head = 0;
};

// Directed multigraph on vertices 0..last with every edge going forward.
// Vertex 0 is the source and `last` the sink. The framing stores, for each
// vertex, its incoming and outgoing edge ids in frame order.
struct FramedGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> in_order, out_order;
    std::vector<int> in_pos, out_pos;  // per edge id

    FramedGraph() = default;
    explicit FramedGraph(int vertices);

    int last() const { return vertex_count - 1; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    // Appends an edge at the end of both frame orders it belongs to.
    int add_edge(int tail, int head);
    void set_in_order(int v, const std::vector<int>& ids);
    void set_out_order(int v, const std::vector<int>& ids);
    void validate() const;
    int indegree(int v) const { return static_cast<int>(in_order[v].size()); }
    int outdegree(int v) const { return static_cast<int>(out_order[v].size()); }
};

using Route = std::vector<int>;       // edge ids from source to sink
using Flow = std::vector<long long>;  // indexed by edge id
using Netflow = std::vector<long long>;

std::vector<int> route_vertices(const Route& r, const FramedGraph& g);
std::string format_route(const Route& r);

// All source-to-sink routes, following outgoing frame orders (lexicographic).
std::vector<Route> routes(const FramedGraph& g, int cap = -1);

// A maximal common subroute [v_i, v_j] of two routes, with the edges entering
// v_i and leaving v_j on each side (-1 at the source / sink).
struct SharedSegment {
    int from = 0, to = 0;
    int p_in = -1, q_in = -1, p_out = -1, q_out = -1;
    bool conflict = false;
};

std::vector<SharedSegment> shared_segments(const Route& p, const Route& q, const FramedGraph& g);
bool coherent(const Route& p, const Route& q, const FramedGraph& g);
std::pair<Route, Route> resolvents(const Route& p, const Route& q, const FramedGraph& g);
bool minimal_conflict(const Route& p, const Route& q, const FramedGraph& g);

// Heights are given per route, aligned with `rs`.
struct AdmissibilityWitness {
    int p = 0, q = 0, p_res = 0, q_res = 0;  // indices into the route list
    mpq_class lhs, rhs;
};
std::optional<AdmissibilityWitness> admissibility_witness(const FramedGraph& g, const std::vector<Route>& rs,
                                                          const std::vector<mpq_class>& h);
bool is_admissible(const FramedGraph& g, const std::vector<Route>& rs, const std::vector<mpq_class>& h);

// sum over a < c of eps^(c-a) (I(e_a) + O(e_c))^2, with 0-based frame positions
// and O = 0 out of the source, I = 0 into the sink.
mpq_class dkk_height(const Route& r, const FramedGraph& g, const mpq_class& eps);

using Clique = std::vector<int>;  // sorted indices into a route list
std::vector<std::vector<char>> coherence_matrix(const FramedGraph& g, const std::vector<Route>& rs);
std::vector<Clique> max_cliques(const FramedGraph& g, const std::vector<Route>& rs, int cap = -1);

Netflow unit_netflow(const FramedGraph& g);         // (1,0,...,0,-1)
Netflow shifted_indegrees(const FramedGraph& g);    // (0,d_1,...,d_{n-1},-sum), d_i = indeg - 1
bool is_flow(const FramedGraph& g, const Netflow& a, const Flow& f);
std::vector<Flow> integer_flows(const FramedGraph& g, const Netflow& a, long long cap = -1);
std::uint64_t kostant(const FramedGraph& g, const Netflow& a);
std::uint64_t kostant_enumerated(const FramedGraph& g, const Netflow& a);
mpz_class lidskii_volume(const FramedGraph& g, const Netflow& a);

// Clique -> integer d-flow: one less than the number of distinct prefixes
// ending with each edge.
Flow omega(const Clique& c, const std::vector<Route>& rs, const FramedGraph& g);

// Replaces every parallel class of size k > 1 by single edges (multiedge
// reduction); returns the new graph and the netflow carried along.
std::pair<FramedGraph, Netflow> simplify_multiedges(const FramedGraph& g, const Netflow& a);

// Small fixtures.
FramedGraph example_graph();       // five routes, two maximal cliques
FramedGraph doubled_path(int n);   // each (i,i+1) twice; flow polytope is a cube
FramedGraph parallel_edges(int k); // k edges 0 -> 1

}  // namespace ptl
