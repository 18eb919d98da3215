#include "ptl/oruga.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ptl {

int OrugaGraph::edge(int i, int t) const {
    if (i < 1 || i > n() + 1 || t < 0 || t >= static_cast<int>(label[i].size()) || label[i][t] < 0)
        throw ValidationError("no edge e^" + std::to_string(i) + "_" + std::to_string(t));
    return label[i][t];
}

OrugaGraph build_oru(const SComp& s) {
    require_composition(s, true);
    OrugaGraph o;
    o.s = s;
    int n = o.n();
    o.g = FramedGraph(n + 2);
    o.label.assign(n + 2, {});
    for (int i = n + 1; i >= 1; --i) {
        int si = o.s_at(i);
        int head = n + 2 - i;
        o.label[i].assign(si + 1, -1);
        for (int t = 1; t < si; ++t) o.label[i][t] = o.g.add_edge(0, head);
        if (i <= n) {
            o.label[i][0] = o.g.add_edge(head - 1, head);
            o.label[i][si] = o.g.add_edge(head - 1, head);
        }
    }
    for (int i = n + 1; i >= 1; --i) {
        int head = n + 2 - i;
        std::vector<int> in;
        for (int id : o.label[i])
            if (id >= 0) in.push_back(id);
        o.g.set_in_order(head, in);
        if (i >= 2) o.g.set_out_order(head, {o.bump(i - 1), o.dip(i - 1)});
    }
    o.g.validate();
    return o;
}

static void check_route(const OrugaRoute& r, const SComp& s) {
    int n = static_cast<int>(s.size());
    int sk = r.k == n + 1 ? 2 : (r.k >= 1 && r.k <= n ? s[r.k - 1] : 0);
    if (r.k < 1 || r.k > n + 1 || r.t < 1 || r.t >= sk || static_cast<int>(r.delta.size()) != r.k - 1)
        throw ValidationError("not a route of oru(s)");
    for (int d : r.delta)
        if (d != 0 && d != 1) throw ValidationError("route choices must be 0 or 1");
}

Route route_edges(const OrugaRoute& r, const OrugaGraph& o) {
    check_route(r, o.s);
    Route out{o.edge(r.k, r.t)};
    for (int j = r.k - 1; j >= 1; --j) out.push_back(r.delta[j - 1] ? o.dip(j) : o.bump(j));
    return out;
}

OrugaRoute decode_route(const Route& r, const OrugaGraph& o) {
    if (r.empty()) throw ValidationError("empty route");
    OrugaRoute out;
    for (int i = 1; i <= o.n() + 1 && out.k == 0; ++i)
        for (int t = 1; t < o.s_at(i); ++t)
            if (o.label[i][t] == r[0]) out.k = i, out.t = t;
    if (out.k == 0 || static_cast<int>(r.size()) != out.k) throw ValidationError("not a route of oru(s)");
    out.delta.assign(out.k - 1, 0);
    for (int j = out.k - 1; j >= 1; --j) {
        int e = r[out.k - j];
        if (e == o.dip(j)) out.delta[j - 1] = 1;
        else if (e != o.bump(j)) throw ValidationError("not a route of oru(s)");
    }
    return out;
}

std::vector<OrugaRoute> all_oruga_routes(const SComp& s) {
    require_composition(s, true);
    int n = static_cast<int>(s.size());
    std::vector<OrugaRoute> out;
    for (int k = 1; k <= n + 1; ++k) {
        int sk = k == n + 1 ? 2 : s[k - 1];
        for (int t = 1; t < sk; ++t)
            for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
                OrugaRoute r{k, t, std::vector<int>(k - 1)};
                for (int a = 0; a < k - 1; ++a) r.delta[a] = (mask >> a) & 1;
                out.push_back(r);
            }
    }
    return out;
}

OrugaRoute prefix_route(const SWord& u, const SComp& s) {
    int n = static_cast<int>(s.size());
    std::vector<int> cnt(n + 1, 0);
    for (int x : u) {
        if (x < 1 || x > n) throw ValidationError("letter out of range");
        ++cnt[x];
    }
    int c = n + 1, t = 1;
    for (int a = 1; a <= n; ++a)
        if (cnt[a] > 0 && cnt[a] < s[a - 1]) {
            c = a, t = cnt[a];
            break;
        }
    OrugaRoute r{c, t, std::vector<int>(c - 1)};
    for (int a = 1; a < c; ++a) {
        if (cnt[a] != 0 && cnt[a] != s[a - 1]) throw ValidationError("prefix is not from a Stirling permutation");
        r.delta[a - 1] = cnt[a] == s[a - 1] ? 1 : 0;
    }
    return r;
}

std::vector<long long> word_to_bumps(const SWord& w, const SComp& s) {
    require_stirling(w, s);
    int n = static_cast<int>(s.size());
    std::vector<long long> b(n, 0);
    for (int i = 1; i <= n; ++i) {
        auto first = std::find(w.begin(), w.end(), i);
        b[i - 1] = std::count_if(w.begin(), first, [i](int x) { return x > i; });
    }
    return b;
}

static std::vector<long long> tail_sums(const SComp& s) {
    int n = static_cast<int>(s.size());
    std::vector<long long> tail(n + 1, 0);  // tail[i-1] = s_{i+1} + ... + s_n
    for (int i = n - 1; i >= 1; --i) tail[i - 1] = tail[i] + s[i];
    return tail;
}

static void check_bumps(const std::vector<long long>& b, const SComp& s) {
    int n = static_cast<int>(s.size());
    if (static_cast<int>(b.size()) != n) throw ValidationError("need one bump flow per letter");
    auto tail = tail_sums(s);
    for (int i = 1; i <= n; ++i)
        if (b[i - 1] < 0 || b[i - 1] > tail[i - 1])
            throw ValidationError("bump flow on e^" + std::to_string(i) + "_0 out of range");
}

SWord bumps_to_word(const std::vector<long long>& b, const SComp& s) {
    require_composition(s, true);
    check_bumps(b, s);
    int n = static_cast<int>(s.size());
    SWord w(s[n - 1], n);
    for (int i = n - 1; i >= 1; --i) w.insert(w.begin() + b[i - 1], s[i - 1], i);
    return w;
}

Flow bumps_to_flow(const std::vector<long long>& b, const OrugaGraph& o) {
    check_bumps(b, o.s);
    auto tail = tail_sums(o.s);
    Flow f(o.g.edge_count(), 0);
    for (int i = 1; i <= o.n(); ++i) {
        f[o.bump(i)] = b[i - 1];
        f[o.dip(i)] = tail[i - 1] - b[i - 1];
    }
    return f;
}

std::vector<long long> flow_to_bumps(const Flow& f, const OrugaGraph& o) {
    if (!is_flow(o.g, shifted_indegrees(o.g), f)) throw ValidationError("not an integer d-flow of oru(s)");
    std::vector<long long> b(o.n());
    for (int i = 1; i <= o.n(); ++i) b[i - 1] = f[o.bump(i)];
    return b;
}

Flow word_to_flow(const SWord& w, const OrugaGraph& o) { return bumps_to_flow(word_to_bumps(w, o.s), o); }
SWord flow_to_word(const Flow& f, const OrugaGraph& o) { return bumps_to_word(flow_to_bumps(f, o), o.s); }

STree bumps_to_tree(const std::vector<long long>& b, const SComp& s) {
    require_composition(s, false);
    check_bumps(b, s);
    int n = static_cast<int>(s.size());
    STree t;
    t.s = s;
    t.children.assign(n + 1, {});
    t.children[n].assign(s[n - 1] + 1, 0);
    for (int i = n - 1; i >= 1; --i) {
        auto lv = leaves(t);
        auto [node, slot] = lv[b[i - 1]];
        t.children[node][slot] = i;
        t.children[i].assign(s[i - 1] + 1, 0);
    }
    return t;
}

std::vector<long long> tree_to_bumps(const STree& t) {
    int n = t.n();
    std::vector<std::pair<int, int>> parent(n + 1, {0, -1});
    for (int v = 1; v <= n; ++v)
        for (int k = 0; k < static_cast<int>(t.children[v].size()); ++k)
            if (int c = t.children[v][k]) parent[c] = {v, k};
    std::vector<long long> b(n, 0);
    STree partial;
    partial.s = t.s;
    partial.children.assign(n + 1, {});
    partial.children[n].assign(t.s[n - 1] + 1, 0);
    for (int i = n - 1; i >= 1; --i) {
        auto lv = leaves(partial);
        auto it = std::find(lv.begin(), lv.end(), parent[i]);
        if (it == lv.end()) throw ValidationError("tree is not decreasing");
        b[i - 1] = it - lv.begin();
        partial.children[parent[i].first][parent[i].second] = i;
        partial.children[i].assign(t.s[i - 1] + 1, 0);
    }
    return b;
}

std::vector<OrugaRoute> delta_w_routes(const SWord& w, const SComp& s) {
    require_stirling(w, s);
    std::vector<OrugaRoute> out;
    for (size_t i = 0; i <= w.size(); ++i) out.push_back(prefix_route(SWord(w.begin(), w.begin() + i), s));
    return out;
}

static std::map<Route, int> route_index(const std::vector<Route>& rs) {
    std::map<Route, int> idx;
    for (size_t k = 0; k < rs.size(); ++k) idx[rs[k]] = static_cast<int>(k);
    return idx;
}

static Clique to_clique(const std::vector<OrugaRoute>& routes, const OrugaGraph& o, const std::map<Route, int>& idx) {
    Clique c;
    for (const auto& r : routes) c.push_back(idx.at(route_edges(r, o)));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

Clique delta_w(const SWord& w, const OrugaGraph& o, const std::vector<Route>& rs) {
    return to_clique(delta_w_routes(w, o.s), o, route_index(rs));
}

AdjacencyPoset hasse_from_adjacency(const SComp& s, int cap) {
    require_composition(s, true);
    check_cap(total(s), cap > 0 ? cap : size_cap(10), "hasse_from_adjacency |s|");
    auto o = build_oru(s);
    auto rs = routes(o.g);
    AdjacencyPoset p;
    p.cliques = max_cliques(o.g, rs);
    std::vector<long long> rank;
    for (const auto& c : p.cliques) {
        p.words.push_back(flow_to_word(omega(c, rs, o.g), o));
        auto inv = inversion_multiset(p.words.back(), s);
        rank.push_back(std::accumulate(inv.m.begin(), inv.m.end(), 0LL));
    }
    // Two cliques are adjacent when they share all routes but one.
    std::map<Clique, std::vector<int>> by_facet;
    for (size_t k = 0; k < p.cliques.size(); ++k)
        for (size_t drop = 0; drop < p.cliques[k].size(); ++drop) {
            Clique f = p.cliques[k];
            f.erase(f.begin() + drop);
            by_facet[f].push_back(static_cast<int>(k));
        }
    p.up.assign(p.cliques.size(), {});
    for (const auto& [facet, owners] : by_facet) {
        if (owners.size() != 2) continue;
        int x = owners[0], y = owners[1];
        if (rank[x] > rank[y]) std::swap(x, y);
        p.up[x].push_back(y);
    }
    for (auto& u : p.up) std::sort(u.begin(), u.end());
    return p;
}

Clique face_simplex(const SFace& f, const OrugaGraph& o, const std::vector<Route>& rs) {
    auto routes_w = delta_w_routes(f.w, o.s);
    auto asc = ascents(f.w);
    std::vector<char> drop(routes_w.size(), 0);
    for (const auto& p : f.A) {
        if (std::find(asc.begin(), asc.end(), p) == asc.end()) throw ValidationError("A must consist of ascents of w");
        drop[block(f.w, p.first).second + 1] = 1;
    }
    std::vector<OrugaRoute> kept;
    for (size_t i = 0; i < routes_w.size(); ++i)
        if (!drop[i]) kept.push_back(routes_w[i]);
    return to_clique(kept, o, route_index(rs));
}

bool is_facet_clique(const Clique& c, const OrugaGraph& o, const std::vector<Route>& rs) {
    int n = o.n();
    if (static_cast<int>(c.size()) != total(o.s) - n + 2) return false;
    Route all_bump{o.edge(n + 1, 1)}, all_dip{o.edge(n + 1, 1)};
    for (int j = n; j >= 1; --j) all_bump.push_back(o.bump(j)), all_dip.push_back(o.dip(j));
    std::map<int, int> starts;
    bool has_bump = false, has_dip = false;
    for (int r : c) {
        has_bump |= rs[r] == all_bump;
        has_dip |= rs[r] == all_dip;
        ++starts[rs[r][0]];
    }
    if (!has_bump || !has_dip) return false;
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t < o.s_at(i); ++t)
            if (starts[o.edge(i, t)] != 1) return false;
    return true;
}

mpq_class oruga_height(const OrugaRoute& r, const SComp& s, const mpq_class& eps) {
    check_route(r, s);
    if (eps <= 0) throw ValidationError("epsilon must be positive");
    int k = r.k;
    std::vector<mpq_class> pw(k + 1, 1);
    for (int i = 1; i <= k; ++i) pw[i] = pw[i - 1] * eps;
    auto tc = [&](int c) { return c == k ? r.t : r.delta[c - 1] * s[c - 1]; };
    mpq_class sum = 0;
    for (int c = 2; c <= k; ++c)
        for (int a = 1; a < c; ++a) {
            long x = tc(c) + r.delta[a - 1];
            sum += pw[c - a] * x * x;
        }
    return -sum;
}

mpq_class epsilon_bound(const SComp& s) {
    require_composition(s, true);
    long n = static_cast<long>(s.size());
    long sum = 1;
    for (size_t j = 1; j < s.size(); ++j) sum += 2L * s[j] + 1;
    return mpq_class(1, n * sum);
}

mpq_class default_epsilon(const SComp& s) { return epsilon_bound(s) / 2; }

static mpq_class height_of_prefix(const SWord& w, size_t len, const SComp& s, const mpq_class& eps) {
    return oruga_height(prefix_route(SWord(w.begin(), w.begin() + len), s), s, eps);
}

QVec vertex_coordinates(const SWord& w, const SComp& s, const mpq_class& eps) {
    require_stirling(w, s);
    int n = static_cast<int>(s.size());
    QVec v(n, 0);
    for (size_t pos = 0; pos < w.size(); ++pos)
        v[w[pos] - 1] += height_of_prefix(w, pos, s, eps) - height_of_prefix(w, pos + 1, s, eps);
    return v;
}

mpq_class edge_scalar(const SWord& w, Pair ascent, const SComp& s, const mpq_class& eps) {
    auto [a, c] = ascent;
    auto [first, last] = block(w, a);
    if (last + 1 >= static_cast<int>(w.size()) || w[last + 1] != c || a >= c)
        throw ValidationError("(a,c) is not an ascent of w");
    SWord u1(w.begin(), w.begin() + first);
    SWord u1c = u1;
    u1c.push_back(c);
    auto h = [&](const SWord& u) { return oruga_height(prefix_route(u, s), s, eps); };
    return h(u1c) + height_of_prefix(w, last + 1, s, eps) - h(u1) - height_of_prefix(w, last + 2, s, eps);
}

TropicalRealization realize(const SComp& s, const mpq_class& eps, int cap) {
    require_composition(s, true);
    if (eps <= 0) throw ValidationError("epsilon must be positive");
    auto o = build_oru(s);
    auto rs = routes(o.g);
    std::vector<mpq_class> h;
    for (const auto& r : rs) h.push_back(oruga_height(decode_route(r, o), s, eps));
    if (auto bad = admissibility_witness(o.g, rs, h))
        throw ValidationError("epsilon " + eps.get_str() + " is not admissible: routes " + format_route(rs[bad->p]) +
                              " and " + format_route(rs[bad->q]) + " give " + bad->lhs.get_str() +
                              " <= " + bad->rhs.get_str() + " against their resolvents");
    TropicalRealization out;
    out.s = s;
    out.eps = eps;
    auto hasse = s_hasse(s, cap);
    for (const auto& w : hasse.elems) out.vertices[w] = vertex_coordinates(w, s, eps);
    for (const auto& w : hasse.elems)
        for (const auto& p : ascents(w))
            out.edges.push_back({w, transpose_ascent(w, p), p.first, p.second, edge_scalar(w, p, s, eps)});
    int n = o.n();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        SWord ws;
        for (int x : sigma) ws.insert(ws.end(), s[x - 1], x);
        out.support.push_back({sigma, ws});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    OrugaRoute bump{n + 1, 1, std::vector<int>(n, 0)}, dip{n + 1, 1, std::vector<int>(n, 1)};
    out.coordinate_sum = oruga_height(bump, s, eps) - oruga_height(dip, s, eps);
    return out;
}

TropicalRealization realize(const SComp& s, int cap) { return realize(s, default_epsilon(s), cap); }

mpz_class multiset_binomial(long m, long k) {
    if (k < 0) return 0;
    mpz_class num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= mpz_class(m + i);
        den *= mpz_class(i + 1);
    }
    return num / den;
}

static mpz_class binomial(long m, long k) {
    if (k < 0 || m < 0 || k > m) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return r;
}

LidskiiReport lidskii_identities(const SComp& s) {
    require_composition(s, false);
    int n = static_cast<int>(s.size());
    if (n == 0) throw ValidationError("empty composition");
    LidskiiReport rep;
    rep.product = 1;
    long tail = 0;
    for (int i = 1; i <= n - 1; ++i) {
        tail += s[n - i];
        rep.product *= mpz_class(1 + tail);
    }
    int m = n - 1;
    std::vector<int> j(m, 0);
    // Weak compositions of n-1 with j_1 + ... + j_i >= i.
    std::function<void(int, int, int)> rec = [&](int i, int left, int partial) {
        if (i == m) {
            if (left != 0) return;
            mpz_class weight = 1;
            int acc = 0;
            for (int k = 0; k < m; ++k) {
                acc += j[k];
                weight *= mpz_class(acc - (k + 1) + 1);
            }
            mpz_class first = weight, second = weight;
            for (int k = 0; k < m; ++k) {
                long sk = s[n - 1 - k];
                first *= binomial(sk + 1, j[k]);
                second *= multiset_binomial(k == 0 ? sk + 1 : sk - 1, j[k]);
            }
            rep.first += first;
            rep.second += second;
            if (second < 0) ++rep.negative_terms;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            if (partial + x < i + 1) continue;
            j[i] = x;
            rec(i + 1, left - x, partial + x);
        }
    };
    rec(0, m, 0);
    return rep;
}

}  // namespace ptl
