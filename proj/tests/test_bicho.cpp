#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ptl/bicho.hpp"
#include "ptl/vectors.hpp"

using namespace ptl;

namespace {

// Edge multiset and inner framings as (tail, head) pairs; the frames at the
// source and the sink never matter for coherence.
using Signature = std::vector<std::vector<std::pair<int, int>>>;
Signature signature(const FramedGraph& g) {
    Signature s;
    std::vector<std::pair<int, int>> all;
    for (const auto& e : g.edges) all.push_back({e.tail, e.head});
    std::sort(all.begin(), all.end());
    s.push_back(all);
    for (int v = 1; v < g.last(); ++v) {
        std::vector<std::pair<int, int>> in, out;
        for (int id : g.in_order[v]) in.push_back({g.edges[id].tail, g.edges[id].head});
        for (int id : g.out_order[v]) out.push_back({g.edges[id].tail, g.edges[id].head});
        s.push_back(in);
        s.push_back(out);
    }
    return s;
}

int count_sym(const Decoration& d, Sym s) { return static_cast<int>(std::count(d.sym.begin(), d.sym.end(), s)); }

std::vector<Decoration> none_down(int n) { return all_decorations(n, {Sym::none, Sym::down}); }

}  // namespace

TEST_CASE("bicho graphs: edge counts, netflow and move order") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 6; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            int one = count_sym(d, Sym::down) + count_sym(d, Sym::up);
            CHECK(b.g.edge_count() == 2 * n + one + 2 * count_sym(d, Sym::updown));
            CHECK(shifted_indegrees(b.g) == bicho_netflow(n));
            CHECK(b.delta == d);
            auto moves = moves_of(d);
            for (int trial = 0; trial < 3; ++trial) {
                std::shuffle(moves.begin(), moves.end(), rng);
                auto c = build_bic(Decoration::uniform(n, Sym::none));
                for (auto m : moves) c = m_move(c, m);
                CHECK(c.delta == d);
                CHECK(signature(c.g) == signature(b.g));
            }
        }
    auto oru = build_bic(Decoration::uniform(5, Sym::none));
    CHECK(oru.g.edge_count() == 10);
    CHECK(routes(oru.g).size() == 32);
    auto mar = build_bic(Decoration::parse("nxxxn"));
    CHECK(mar.g.edge_count() == 2 * 5 + 2 * 3);
    CHECK_THROWS_AS(m_move(oru, {1, 0}), ValidationError);
    CHECK_THROWS_AS(m_move(mar, {2, 1}), ValidationError);
}

TEST_CASE("M-moves refine decorations one symbol at a time") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            for (int p = 2; p < n; ++p)
                for (int k = 0; k < 2; ++k) {
                    if (b.moved(p, k)) continue;
                    auto c = m_move(b, {p, k});
                    CHECK(signature(c.g) == signature(build_bic(c.delta).g));
                    CHECK(c.g.edge_count() == b.g.edge_count() + 1);
                }
        }
}

TEST_CASE("route naming") {
    auto b = build_bic(Decoration::parse("nundnxn"));
    BichoRoute r{2, 6, {0, 1, 0, 1, 0}};
    auto nm = r.naming(7);
    CHECK(nm.k1 == 6);
    CHECK(nm.k2 == 3);
    CHECK(nm.theta == std::vector<int>{1, 0, 1});
    CHECK(nm.t2 == 0);
    auto e = bicho_route_edges(r, b);
    CHECK(decode_bicho_route(e, b) == r);
    auto vs = route_vertices(e, b.g);
    CHECK(vs == std::vector<int>{0, 2, 3, 4, 5, 7});
    auto rs = routes(b.g);
    CHECK(std::find(rs.begin(), rs.end(), e) != rs.end());
    for (const auto& q : rs) CHECK(bicho_route_edges(decode_bicho_route(q, b), b) == q);
    // the bump at position 2 is gone, so no route steps through it
    CHECK_THROWS_AS(bicho_route_edges({1, 7, {0, 0, 0, 0, 0, 0, 0}}, b), ValidationError);
}

TEST_CASE("route splitting under M-moves") {
    // oru_5 and the move on the bump (v2, v3)
    auto oru = build_bic(Decoration::uniform(5, Sym::none));
    MMove m{3, 0};
    BichoRoute through{1, 5, {1, 0, 0, 1, 0}}, avoid{1, 5, {0, 1, 1, 0, 1}};
    CHECK(split_route(avoid, m) == std::vector<BichoRoute>{avoid});
    auto parts = split_route(through, m);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == BichoRoute{3, 5, {0, 1, 0}});
    CHECK(parts[1] == BichoRoute{1, 3, {1, 0, 0}});
    auto moved = m_move(oru, m);
    CHECK(route_vertices(bicho_route_edges(parts[0], moved), moved.g) == std::vector<int>{0, 3, 4, 5});
    CHECK(route_vertices(bicho_route_edges(parts[1], moved), moved.g) == std::vector<int>{0, 1, 2, 5});

    for (int n = 3; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            auto rs = routes(b.g);
            for (int p = 2; p < n; ++p)
                for (int k = 0; k < 2; ++k) {
                    if (b.moved(p, k)) continue;
                    auto c = m_move(b, {p, k});
                    auto crs = routes(c.g);
                    std::set<Route> all(crs.begin(), crs.end());
                    std::set<Route> image;
                    for (const auto& r : rs) {
                        auto br = decode_bicho_route(r, b);
                        auto out = split_route(br, {p, k});
                        bool uses = std::find(r.begin(), r.end(), b.step[p][k]) != r.end();
                        CHECK(out.size() == (uses ? 2u : 1u));
                        for (const auto& q : out) {
                            auto e = bicho_route_edges(q, c);
                            CHECK(all.count(e));
                            image.insert(e);
                        }
                    }
                    CHECK(image == all);
                }
        }
}

TEST_CASE("exceptional routes are the routes coherent with everything") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            auto rs = routes(b.g);
            auto coh = coherence_matrix(b.g, rs);
            std::set<Route> universal;
            for (size_t i = 0; i < rs.size(); ++i)
                if (std::all_of(coh[i].begin(), coh[i].end(), [](char c) { return c != 0; })) universal.insert(rs[i]);
            std::set<Route> ex;
            for (const auto& r : exceptional_routes(d)) ex.insert(bicho_route_edges(r, b));
            CHECK(ex == universal);
        }
}

TEST_CASE("M(C) maps maximal cliques onto maximal cliques") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            auto rs = routes(b.g);
            auto cl = max_cliques(b.g, rs);
            for (int p = 2; p < n; ++p)
                for (int k = 0; k < 2; ++k) {
                    if (b.moved(p, k)) continue;
                    auto c = m_move(b, {p, k});
                    auto crs = routes(c.g);
                    std::map<Route, int> idx;
                    for (size_t q = 0; q < crs.size(); ++q) idx[crs[q]] = static_cast<int>(q);
                    auto ccl = max_cliques(c.g, crs);
                    std::set<Clique> image;
                    for (const auto& cq : cl) {
                        std::set<int> mc;
                        for (int r : cq)
                            for (const auto& q : split_route(decode_bicho_route(rs[r], b), {p, k}))
                                mc.insert(idx.at(bicho_route_edges(q, c)));
                        CHECK(mc.size() == cq.size() + 1);
                        image.insert(Clique(mc.begin(), mc.end()));
                    }
                    CHECK(image == std::set<Clique>(ccl.begin(), ccl.end()));
                }
        }
}

TEST_CASE("counts: d-flows, maximal cliques and permutrees") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            auto dn = bicho_netflow(n);
            auto flows = integer_flows(b.g, dn).size();
            CHECK(flows == count_permutrees(d));
            CHECK(kostant(b.g, dn) == flows);
            CHECK(max_cliques(b.g, routes(b.g)).size() == flows);
            CHECK(lidskii_volume(b.g, unit_netflow(b.g)) == mpz_class(static_cast<unsigned long>(flows)));
        }
}

TEST_CASE("d-flow and permutree bijection") {
    // the worked grid example
    auto d = Decoration::parse("ndndn");
    auto b = build_bic(d);
    std::vector<long long> bumps{0, 1, 2, 1, 2};
    auto f = bumps_to_dflow(bumps, b);
    auto t = dflow_to_permutree(f, b);
    check_permutree(t);
    CHECK(permutree_bumps(t) == bumps);
    CHECK(permutree_to_dflow(t, b) == f);

    for (int n = 1; n <= 5; ++n)
        for (const auto& dd : none_down(n)) {
            auto bb = build_bic(dd);
            auto lat = rotation_lattice(dd);
            // zero flow is the bottom permutree
            auto zero = dflow_to_permutree(bumps_to_dflow(std::vector<long long>(n, 0), bb), bb);
            CHECK(inversion_set(zero) == lat.keys[0]);
            std::set<PairSet> seen;
            for (const auto& fl : integer_flows(bb.g, bicho_netflow(n))) {
                auto tr = dflow_to_permutree(fl, bb);
                CHECK(permutree_to_dflow(tr, bb) == fl);
                seen.insert(inversion_set(tr));
            }
            CHECK(seen.size() == lat.elems.size());
            for (const auto& tr : lat.elems)
                CHECK(inversion_set(dflow_to_permutree(permutree_to_dflow(tr, bb), bb)) == inversion_set(tr));
        }
    auto up = build_bic(Decoration::parse("nun"));
    CHECK_THROWS_AS(bumps_to_dflow({0, 0, 0}, up), ValidationError);
}

TEST_CASE("modified insertion gives the maximal cliques") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto b = build_bic(d);
            auto rs = routes(b.g);
            auto cl = max_cliques(b.g, rs);
            auto lat = rotation_lattice(d);
            std::set<Clique> got;
            for (const auto& t : lat.elems) {
                auto c = permutree_clique(t, b, rs);
                CHECK(static_cast<int>(c.size()) == t.edge_count());
                got.insert(c);
                if (n <= 4) {
                    auto ref = permutree_clique_routes(t);
                    for (const auto& p : linear_extensions(t)) CHECK(table_clique_routes(p, d) == ref);
                }
            }
            CHECK(got == std::set<Clique>(cl.begin(), cl.end()));
            // the bottom permutree carries every exceptional route
            auto bottom = permutree_clique_routes(lat.elems[0]);
            for (const auto& r : exceptional_routes(d))
                CHECK(std::find(bottom.begin(), bottom.end(), r) != bottom.end());
        }
}

TEST_CASE("oriented dual adjacency is the rotation lattice") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto adj = rotation_from_adjacency(d);
            auto lat = rotation_lattice(d);
            auto b = build_bic(d);
            REQUIRE(adj.cliques.size() == lat.elems.size());
            std::map<Clique, int> where;
            for (size_t k = 0; k < adj.cliques.size(); ++k) where[adj.cliques[k]] = static_cast<int>(k);
            std::vector<int> phi;
            for (const auto& t : lat.elems) phi.push_back(where.at(permutree_clique(t, b, adj.routes)));
            for (size_t k = 0; k < lat.elems.size(); ++k) {
                std::vector<int> mapped;
                for (int u : lat.up[k]) mapped.push_back(phi[u]);
                std::sort(mapped.begin(), mapped.end());
                CHECK(mapped == adj.up[phi[k]]);
            }
        }
    auto w = rotation_from_adjacency(Decoration::uniform(4, Sym::none));
    size_t covers = 0;
    for (const auto& u : w.up) covers += u.size();
    CHECK(w.cliques.size() == 24);
    CHECK(covers == 36);
    // three rank one covers for none updown up none
    auto lat = rotation_lattice(Decoration::parse("nxun"));
    CHECK(lat.up[0].size() == 3);
}

TEST_CASE("conjecture checkers") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : all_decorations(n)) {
            auto rep = check_conjectures(d);
            CHECK(rep.flows == rep.permutrees);
            CHECK(rep.cliques == rep.flows);
            CHECK(rep.conjecture_2);
            CHECK(rep.equivariance);
            CHECK(rep.decomposition);
            bool nd = std::none_of(d.sym.begin(), d.sym.end(), [](Sym s) { return has_up(s); });
            CHECK(rep.conjecture_1.has_value() == nd);
            if (nd) CHECK(*rep.conjecture_1);
        }
    CHECK(check_conjectures(Decoration::parse("ndn")).rhs_1 == 5);
    CHECK_THROWS_AS(check_conjectures(Decoration::uniform(7, Sym::none)), CapError);
}
