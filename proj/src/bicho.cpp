#include "ptl/bicho.hpp"

#include "ptl/vectors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace ptl {

namespace {

void refresh_positions(FramedGraph& g) {
    g.in_pos.assign(g.edges.size(), 0);
    g.out_pos.assign(g.edges.size(), 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (size_t k = 0; k < g.in_order[v].size(); ++k) g.in_pos[g.in_order[v][k]] = static_cast<int>(k);
        for (size_t k = 0; k < g.out_order[v].size(); ++k) g.out_pos[g.out_order[v][k]] = static_cast<int>(k);
    }
}

Sym add_move(Sym s, int kind) {
    bool up = has_up(s) || kind == 0;
    bool down = has_down(s) || kind == 1;
    return up ? (down ? Sym::updown : Sym::up) : (down ? Sym::down : Sym::none);
}

void require_none_down(const Decoration& delta) {
    for (Sym s : delta.sym)
        if (has_up(s))
            throw ValidationError("the d-flow bijection is only available for decorations over none and down, got " +
                                  delta.to_string());
}

int kind_edge(const BichoGraph& b, int pos, int kind) {
    return b.moved(pos, kind) ? b.sink[pos][kind] : b.step[pos][kind];
}

}  // namespace

Netflow bicho_netflow(int n) {
    Netflow d(n + 1, 1);
    d[0] = 0;
    d[n] = -(n - 1);
    return d;
}

std::vector<MMove> moves_of(const Decoration& delta) {
    std::vector<MMove> out;
    for (int p = 1; p <= delta.n(); ++p) {
        if (has_up(delta.at(p))) out.push_back({p, 0});
        if (has_down(delta.at(p))) out.push_back({p, 1});
    }
    return out;
}

BichoGraph m_move(const BichoGraph& b, MMove m) {
    int n = b.n();
    if (m.pos < 2 || m.pos > n - 1 || (m.kind != 0 && m.kind != 1))
        throw ValidationError("M-moves act on inner positions 2..n-1");
    if (b.moved(m.pos, m.kind)) throw ValidationError("edge already moved");
    BichoGraph r = b;
    FramedGraph& g = r.g;
    int e = b.step[m.pos][m.kind];
    int s = g.edge_count();
    g.edges.push_back({s, m.pos - 1, n});
    // The sink edge takes the outgoing slot, the old edge becomes the source edge.
    auto& out = g.out_order[m.pos - 1];
    *std::find(out.begin(), out.end(), e) = s;
    g.edges[e].tail = 0;
    g.out_order[0].push_back(e);
    g.in_order[n].push_back(s);
    refresh_positions(g);
    g.validate();
    r.step[m.pos][m.kind] = -1;
    r.source[m.pos][m.kind] = e;
    r.sink[m.pos][m.kind] = s;
    auto sym = r.delta.sym;
    sym[m.pos - 1] = add_move(sym[m.pos - 1], m.kind);
    r.delta = Decoration::from(sym);
    return r;
}

BichoGraph build_bic(const Decoration& delta) {
    int n = delta.n();
    if (n < 1) throw ValidationError("bicho graphs need n >= 1");
    BichoGraph b;
    b.delta = Decoration::uniform(n, Sym::none);
    b.g = FramedGraph(n + 1);
    b.step.assign(n + 1, {-1, -1});
    b.source.assign(n + 1, {-1, -1});
    b.sink.assign(n + 1, {-1, -1});
    for (int p = 1; p <= n; ++p) {
        b.step[p][0] = b.g.add_edge(p - 1, p);
        b.step[p][1] = b.g.add_edge(p - 1, p);
    }
    for (MMove m : moves_of(delta)) b = m_move(b, m);
    if (shifted_indegrees(b.g) != bicho_netflow(n)) throw std::logic_error("bicho netflow is not (0,1,...,1,-n+1)");
    return b;
}

BichoRoute::Naming BichoRoute::naming(int n) const {
    Naming out;
    out.k1 = n + 1 - a;
    out.t1 = kinds.front();
    out.k2 = n + 2 - c;
    out.t2 = kinds.back();
    if (kinds.size() > 2) out.theta.assign(kinds.begin() + 1, kinds.end() - 1);
    return out;
}

std::string BichoRoute::to_string(int n) const {
    auto nm = naming(n);
    std::string th;
    for (int k : nm.theta) th += static_cast<char>('0' + k);
    return "R(" + std::to_string(nm.k1) + "," + std::to_string(nm.t1) + ",(" + th + ")," + std::to_string(nm.k2) +
           "," + std::to_string(nm.t2) + ")";
}

Route bicho_route_edges(const BichoRoute& r, const BichoGraph& b) {
    int n = b.n();
    if (r.a < 1 || r.c > n || r.a > r.c || (r.a == r.c && n != 1) ||
        static_cast<int>(r.kinds.size()) != r.c - r.a + 1)
        throw ValidationError("malformed bicho route");
    Route out;
    for (int p = r.a; p <= r.c; ++p) {
        int k = r.kinds[p - r.a];
        if (k != 0 && k != 1) throw ValidationError("route kinds must be 0 or 1");
        int id;
        if (p == r.a && p > 1)
            id = b.source[p][k];
        else if (p == r.c && p < n)
            id = b.sink[p][k];
        else
            id = b.step[p][k];
        if (id < 0) throw ValidationError("route uses an edge absent from bic_" + b.delta.to_string());
        out.push_back(id);
    }
    return out;
}

BichoRoute decode_bicho_route(const Route& r, const BichoGraph& b) {
    if (r.empty()) throw ValidationError("empty route");
    const auto& g = b.g;
    BichoRoute out;
    out.a = g.edges[r.front()].head;
    out.c = g.edges[r.back()].tail + 1;
    if (r.size() == 1) out.c = out.a;
    for (size_t k = 0; k < r.size(); ++k) {
        int p = out.a + static_cast<int>(k);
        int id = r[k], kind = -1;
        for (int t = 0; t < 2; ++t)
            if (b.step[p][t] == id || b.source[p][t] == id || b.sink[p][t] == id) kind = t;
        if (kind < 0) throw ValidationError("not a route of bic_" + b.delta.to_string());
        out.kinds.push_back(kind);
    }
    if (bicho_route_edges(out, b) != r) throw ValidationError("not a route of bic_" + b.delta.to_string());
    return out;
}

std::vector<BichoRoute> split_route(const BichoRoute& r, MMove m) {
    if (m.pos <= r.a || m.pos >= r.c || r.kinds[m.pos - r.a] != m.kind) return {r};
    int cut = m.pos - r.a;
    BichoRoute r1{m.pos, r.c, {r.kinds.begin() + cut, r.kinds.end()}};
    BichoRoute r2{r.a, m.pos, {r.kinds.begin(), r.kinds.begin() + cut + 1}};
    return {r1, r2};
}

static std::vector<BichoRoute> apply_moves(std::vector<BichoRoute> rs, const std::vector<MMove>& moves) {
    for (MMove m : moves) {
        std::set<BichoRoute> next;
        for (const auto& r : rs)
            for (auto& q : split_route(r, m)) next.insert(std::move(q));
        rs.assign(next.begin(), next.end());
    }
    return rs;
}

std::vector<BichoRoute> exceptional_routes(const Decoration& delta) {
    int n = delta.n();
    std::vector<BichoRoute> base{{1, n, std::vector<int>(n, 0)}, {1, n, std::vector<int>(n, 1)}};
    return apply_moves(base, moves_of(delta));
}

std::vector<long long> permutree_bumps(const Permutree& t) {
    auto desc = descendants(t);
    std::vector<long long> f(t.n(), 0);
    for (int p = 1; p <= t.n(); ++p)
        for (int j = 1; j < p; ++j) f[p - 1] += desc[j][p];
    return f;
}

Flow bumps_to_dflow(const std::vector<long long>& bumps, const BichoGraph& b) {
    require_none_down(b.delta);
    int n = b.n();
    if (static_cast<int>(bumps.size()) != n || bumps[0] != 0)
        throw ValidationError("need n bump values starting with 0");
    Flow f(b.g.edge_count(), 0);
    long long dip = 0;
    for (int p = 1; p <= n; ++p) {
        if (bumps[p - 1] < 0) throw ValidationError("negative bump flow");
        if (p > 1) {
            bool kept = b.delta.at(p - 1) == Sym::none;
            dip = bumps[p - 2] + (kept ? dip : 0) + 1 - bumps[p - 1];
        }
        if (dip < 0) throw ValidationError("bump values do not extend to a d-flow");
        f[b.step[p][0]] = bumps[p - 1];
        f[kind_edge(b, p, 1)] = dip;
    }
    if (!is_flow(b.g, bicho_netflow(n), f)) throw std::logic_error("bump extension is not a d-flow");
    return f;
}

std::vector<long long> dflow_bumps(const Flow& f, const BichoGraph& b) {
    require_none_down(b.delta);
    if (!is_flow(b.g, bicho_netflow(b.n()), f)) throw ValidationError("not an integer d-flow of bic_" + b.delta.to_string());
    std::vector<long long> out;
    for (int p = 1; p <= b.n(); ++p) out.push_back(f[b.step[p][0]]);
    return out;
}

Perm bumps_to_table(const std::vector<long long>& bumps) {
    int n = static_cast<int>(bumps.size());
    std::vector<long long> h(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        long long target = i - bumps[i - 1];
        if (target < 1 || target > i) throw ValidationError("bump value out of range at position " + std::to_string(i));
        for (int j = 1; j < i; ++j)
            if (h[j] >= target) ++h[j];
        h[i] = target;
    }
    Perm p(n);
    for (int i = 1; i <= n; ++i) p[h[i] - 1] = i;
    return p;
}

Flow permutree_to_dflow(const Permutree& t, const BichoGraph& b) {
    if (!(t.delta == b.delta)) throw ValidationError("permutree and graph decorations differ");
    return bumps_to_dflow(permutree_bumps(t), b);
}

Permutree dflow_to_permutree(const Flow& f, const BichoGraph& b) {
    return insert(bumps_to_table(dflow_bumps(f, b)), b.delta);
}

static Perm some_linear_extension(const Permutree& t) {
    // Children first, smallest label among the available nodes.
    int n = t.n();
    std::vector<int> pending(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        for (int c : t.child[v])
            if (c > 0) ++pending[v];
    std::set<int> ready;
    for (int v = 1; v <= n; ++v)
        if (!pending[v]) ready.insert(v);
    Perm p;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        p.push_back(v);
        for (int a : t.parent[v])
            if (a > 0 && --pending[a] == 0) ready.insert(a);
    }
    if (static_cast<int>(p.size()) != n) throw ValidationError("permutree has a cycle");
    return p;
}

std::vector<BichoRoute> permutree_clique_routes(const Permutree& t) {
    return table_clique_routes(some_linear_extension(t), t.delta);
}

std::vector<BichoRoute> table_clique_routes(const Perm& p, const Decoration& delta) {
    // In oru_n the table p labels its chain by the all-dip route followed by
    // the routes switching positions p_1, p_2, ... to bumps.
    require_permutation(p);
    int n = delta.n();
    if (static_cast<int>(p.size()) != n) throw ValidationError("permutation and decoration sizes differ");
    std::vector<BichoRoute> chain;
    BichoRoute r{1, n, std::vector<int>(n, 1)};
    chain.push_back(r);
    for (int v : p) {
        r.kinds[v - 1] = 0;
        chain.push_back(r);
    }
    return apply_moves(chain, moves_of(delta));
}

Clique permutree_clique(const Permutree& t, const BichoGraph& b, const std::vector<Route>& rs) {
    std::map<Route, int> index;
    for (size_t k = 0; k < rs.size(); ++k) index.emplace(rs[k], static_cast<int>(k));
    Clique out;
    for (const auto& r : permutree_clique_routes(t)) {
        auto it = index.find(bicho_route_edges(r, b));
        if (it == index.end()) throw std::logic_error("clique route missing from the route list");
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BichoAdjacency rotation_from_adjacency(const Decoration& delta, int cap) {
    check_cap(delta.n(), cap > 0 ? cap : size_cap(6), "rotation_from_adjacency n");
    auto b = build_bic(delta);
    BichoAdjacency out;
    out.routes = routes(b.g);
    out.cliques = max_cliques(b.g, out.routes);
    std::map<Clique, std::vector<int>> by_facet;
    for (size_t k = 0; k < out.cliques.size(); ++k)
        for (size_t drop = 0; drop < out.cliques[k].size(); ++drop) {
            Clique f = out.cliques[k];
            f.erase(f.begin() + drop);
            by_facet[f].push_back(static_cast<int>(k));
        }
    // Across a shared facet the two exchanged routes are compared on the
    // positions they both use; the one taking a dip first lies above.
    auto only = [&](int x, int y) {
        Clique d;
        std::set_difference(out.cliques[x].begin(), out.cliques[x].end(), out.cliques[y].begin(),
                            out.cliques[y].end(), std::back_inserter(d));
        return decode_bicho_route(out.routes[d.at(0)], b);
    };
    out.up.assign(out.cliques.size(), {});
    for (const auto& [facet, owners] : by_facet) {
        if (owners.size() != 2) continue;
        int x = owners[0], y = owners[1];
        auto r = only(x, y), q = only(y, x);
        std::vector<int> kr, kq;
        for (int p = std::max(r.a, q.a); p <= std::min(r.c, q.c); ++p) {
            kr.push_back(r.kinds[p - r.a]);
            kq.push_back(q.kinds[p - q.a]);
        }
        if (kr == kq) throw std::logic_error("exchanged routes agree on their common positions");
        if (kr > kq) std::swap(x, y);
        out.up[x].push_back(y);
    }
    for (auto& u : out.up) std::sort(u.begin(), u.end());
    return out;
}

unsigned long long bicho_flow_count(const Decoration& delta) {
    if (delta.n() <= 1) return 1;
    auto b = build_bic(delta);
    return kostant(b.g, bicho_netflow(b.n()));
}

namespace {

// Symbols restricted to a set of positions (bitmask over 0-based indices), ends normalized.
Decoration restrict_to(const std::vector<Sym>& s, std::uint32_t keep) {
    std::vector<Sym> out;
    for (size_t k = 0; k < s.size(); ++k)
        if (keep >> k & 1) out.push_back(s[k]);
    return Decoration::from(out);
}

unsigned long long factorial(int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Sum over a down position i and a set J of none positions of
// F(left of i minus J) F(right of i minus J) |J|!. Up counts as down.
// Without any down position only J = all remains, worth m!.
unsigned long long recursion_rhs(const std::vector<Sym>& s, const std::function<unsigned long long(const Decoration&)>& F) {
    int m = static_cast<int>(s.size());
    std::vector<int> downs, nones;
    for (int k = 0; k < m; ++k) {
        bool inner = k > 0 && k + 1 < m;
        if (inner && s[k] != Sym::none) downs.push_back(k);
        else nones.push_back(k);
    }
    if (downs.empty()) return factorial(m);
    unsigned long long total = 0;
    int z = static_cast<int>(nones.size());
    for (int i : downs)
        for (std::uint32_t sub = 0; sub < (1u << z); ++sub) {
            std::uint32_t jmask = 0;
            for (int q = 0; q < z; ++q)
                if (sub >> q & 1) jmask |= 1u << nones[q];
            std::uint32_t left = ((1u << i) - 1) & ~jmask;
            std::uint32_t right = ((1u << m) - 1) & ~((2u << i) - 1) & ~jmask;
            total += F(restrict_to(s, left)) * F(restrict_to(s, right)) * factorial(__builtin_popcount(sub));
        }
    return total;
}

}  // namespace

ConjectureReport check_conjectures(const Decoration& delta, int cap) {
    int n = delta.n();
    check_cap(n, cap > 0 ? cap : size_cap(6), "check_conjectures n");
    ConjectureReport rep;
    rep.delta = delta;
    std::map<std::vector<Sym>, unsigned long long> memo;
    std::function<unsigned long long(const Decoration&)> F = [&](const Decoration& d) {
        auto it = memo.find(d.sym);
        if (it != memo.end()) return it->second;
        auto v = bicho_flow_count(d);
        memo.emplace(d.sym, v);
        return v;
    };
    rep.flows = F(delta);
    rep.permutrees = count_permutrees(delta);
    if (n >= 1) {
        auto b = build_bic(delta);
        rep.cliques = max_cliques(b.g, routes(b.g)).size();
    } else {
        rep.cliques = 1;
    }

    bool none_down = std::none_of(delta.sym.begin(), delta.sym.end(), [](Sym s) { return has_up(s); });
    if (none_down) {
        rep.rhs_1 = recursion_rhs(delta.sym, F);
        rep.conjecture_1 = rep.rhs_1 == rep.flows;
    }

    // Segments between consecutive cuts {1, updown positions, n}, cuts shared.
    std::vector<int> cuts{1};
    for (int p = 2; p < n; ++p)
        if (delta.at(p) == Sym::updown) cuts.push_back(p);
    if (n > 1) cuts.push_back(n);
    rep.rhs_2 = 1;
    unsigned long long product = 1;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        std::vector<Sym> seg(delta.sym.begin() + cuts[k] - 1, delta.sym.begin() + cuts[k + 1]);
        seg.front() = seg.back() = Sym::none;
        rep.rhs_2 *= recursion_rhs(seg, F);
        product *= F(Decoration::from(seg));
    }
    rep.conjecture_2 = rep.rhs_2 == rep.flows;
    rep.decomposition = product == rep.flows;

    std::vector<Sym> swapped = delta.sym;
    for (Sym& s : swapped)
        if (s == Sym::down) s = Sym::up;
        else if (s == Sym::up) s = Sym::down;
    rep.equivariance = F(Decoration::from(swapped)) == rep.flows;
    return rep;
}

BichoVerification verify_bicho(const Decoration& delta, int cap) {
    BichoVerification v;
    auto adj = rotation_from_adjacency(delta, cap);
    auto lat = rotation_lattice(delta, cap);
    auto b = build_bic(delta);
    auto dn = bicho_netflow(b.n());
    auto flows = integer_flows(b.g, dn);
    v.flows = flows.size();
    v.cliques = adj.cliques.size();
    v.permutrees = count_permutrees(delta);
    v.counts = v.flows == v.cliques && v.flows == v.permutrees && v.flows == lat.elems.size();
    if (!v.counts) return v;

    std::map<Clique, int> where;
    for (size_t k = 0; k < adj.cliques.size(); ++k) where[adj.cliques[k]] = static_cast<int>(k);
    std::vector<int> phi;
    std::set<int> hit;
    for (const auto& t : lat.elems) {
        auto it = where.find(permutree_clique(t, b, adj.routes));
        phi.push_back(it == where.end() ? -1 : it->second);
        if (it != where.end()) hit.insert(it->second);
    }
    v.clique_bijection = hit.size() == adj.cliques.size();
    if (v.clique_bijection) {
        v.lattice = true;
        for (size_t k = 0; k < lat.elems.size(); ++k) {
            std::vector<int> mapped;
            for (int u : lat.up[k]) mapped.push_back(phi[u]);
            std::sort(mapped.begin(), mapped.end());
            v.lattice = v.lattice && mapped == adj.up[phi[k]];
        }
    }
    bool none_down = std::none_of(delta.sym.begin(), delta.sym.end(), [](Sym s) { return has_up(s); });
    if (none_down) {
        bool ok = true;
        std::set<PairSet> seen;
        for (const auto& f : flows) {
            auto t = dflow_to_permutree(f, b);
            ok = ok && permutree_to_dflow(t, b) == f;
            seen.insert(inversion_set(t));
        }
        v.round_trip = ok && seen.size() == lat.elems.size();
    }
    return v;
}

}  // namespace ptl
