#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ptl/flows.hpp"
#include "ptl/permutree.hpp"

namespace ptl {

// The edge (v_{pos-1}, v_pos) of oru_n of the given kind (0 bump, 1 dip).
struct MMove {
    int pos = 0, kind = 0;
    bool operator==(const MMove&) const = default;
};

// bic_delta on v_0..v_n. Symbol delta_p governs the two edges (v_{p-1}, v_p):
// up moves the bump, down moves the dip. A moved edge becomes a source edge
// (v_0, v_p) holding its incoming slot and a sink edge (v_{p-1}, v_n)
// holding its outgoing slot.
struct BichoGraph {
    Decoration delta;
    FramedGraph g;
    // Edge ids indexed [pos][kind], pos in 1..n; -1 when absent.
    std::vector<std::array<int, 2>> step, source, sink;

    int n() const { return delta.n(); }
    bool moved(int pos, int kind) const { return step[pos][kind] < 0; }
};

BichoGraph build_bic(const Decoration& delta);
// Surgery on an existing graph; the result carries the coarsened decoration.
BichoGraph m_move(const BichoGraph& b, MMove m);
// The moves taking oru_n to bic_delta, by position then kind.
std::vector<MMove> moves_of(const Decoration& delta);
// (0, 1, ..., 1, -(n-1)).
Netflow bicho_netflow(int n);

// A route entering v_a by a source edge (position a), stepping through
// positions a+1..c-1 and leaving v_{c-1} by a sink edge (position c).
// kinds[p-a] is the kind used at position p.
struct BichoRoute {
    int a = 0, c = 0;
    std::vector<int> kinds;

    // The naming R(k1, t1, theta, k2, t2) with k1 = n+1-a and k2 = n+2-c.
    struct Naming {
        int k1 = 0, t1 = 0;
        std::vector<int> theta;
        int k2 = 0, t2 = 0;
    };
    Naming naming(int n) const;
    std::string to_string(int n) const;

    bool operator==(const BichoRoute&) const = default;
    auto operator<=>(const BichoRoute&) const = default;
};

Route bicho_route_edges(const BichoRoute& r, const BichoGraph& b);
BichoRoute decode_bicho_route(const Route& r, const BichoGraph& b);
// M(R) for a move on the graph containing R.
std::vector<BichoRoute> split_route(const BichoRoute& r, MMove m);
// All-bump and all-dip routes of oru_n pushed through the moves of delta.
std::vector<BichoRoute> exceptional_routes(const Decoration& delta);

// d-flow <-> permutree for delta over {none, down}; other symbols throw.
// A flow is determined by its bump values f(e_p) = #{j < p : j is an ancestor of p}.
std::vector<long long> permutree_bumps(const Permutree& t);
Flow bumps_to_dflow(const std::vector<long long>& bumps, const BichoGraph& b);
std::vector<long long> dflow_bumps(const Flow& f, const BichoGraph& b);
// The grid construction: returns the insertion word, bottom row first.
Perm bumps_to_table(const std::vector<long long>& bumps);
Flow permutree_to_dflow(const Permutree& t, const BichoGraph& b);
Permutree dflow_to_permutree(const Flow& f, const BichoGraph& b);

// Routes labelling the edges of t: the moves of delta applied to the clique
// of the permutation table of t in oru_n.
std::vector<BichoRoute> permutree_clique_routes(const Permutree& t);
// The same labelling read from any decorated table (insertion word) of t.
std::vector<BichoRoute> table_clique_routes(const Perm& p, const Decoration& delta);
Clique permutree_clique(const Permutree& t, const BichoGraph& b, const std::vector<Route>& rs);

// Dual adjacency of the maximal cliques (pairs sharing all routes but one),
// oriented by comparing the two exchanged routes.
struct BichoAdjacency {
    std::vector<Route> routes;
    std::vector<Clique> cliques;
    std::vector<std::vector<int>> up;
};
BichoAdjacency rotation_from_adjacency(const Decoration& delta, int cap = -1);

struct ConjectureReport {
    Decoration delta;
    unsigned long long flows = 0, permutrees = 0, cliques = 0;
    std::optional<bool> conjecture_1;  // only for delta over {none, down}
    unsigned long long rhs_1 = 0, rhs_2 = 0;
    bool conjecture_2 = false;
    bool equivariance = false;   // count unchanged when down and up are swapped
    bool decomposition = false;  // product over the updown cuts
};
unsigned long long bicho_flow_count(const Decoration& delta);

// Counts, clique bijection, lattice isomorphism and (over none/down) the
// d-flow round trip for one decoration.
struct BichoVerification {
    unsigned long long flows = 0, cliques = 0, permutrees = 0;
    bool counts = false, clique_bijection = false, lattice = false;
    std::optional<bool> round_trip;
    bool ok() const { return counts && clique_bijection && lattice && round_trip.value_or(true); }
};
BichoVerification verify_bicho(const Decoration& delta, int cap = -1);
ConjectureReport check_conjectures(const Decoration& delta, int cap = -1);

}  // namespace ptl
