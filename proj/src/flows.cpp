#include "ptl/flows.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ptl {

FramedGraph::FramedGraph(int vertices)
    : vertex_count(vertices), in_order(vertices), out_order(vertices) {
    if (vertices < 2) throw ValidationError("a framed graph needs a source and a sink");
}

int FramedGraph::add_edge(int tail, int head) {
    if (tail < 0 || head >= vertex_count || tail >= head)
        throw ValidationError("edge (" + std::to_string(tail) + "," + std::to_string(head) + ") does not go forward");
    int id = edge_count();
    edges.push_back({id, tail, head});
    in_pos.push_back(static_cast<int>(in_order[head].size()));
    out_pos.push_back(static_cast<int>(out_order[tail].size()));
    in_order[head].push_back(id);
    out_order[tail].push_back(id);
    return id;
}

static void reorder(std::vector<int>& slot, std::vector<int>& pos, const std::vector<int>& ids, const char* what) {
    auto a = slot, b = ids;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw ValidationError(std::string("framing order is not a permutation of the ") + what + " edges");
    slot = ids;
    for (size_t k = 0; k < ids.size(); ++k) pos[ids[k]] = static_cast<int>(k);
}

void FramedGraph::set_in_order(int v, const std::vector<int>& ids) { reorder(in_order[v], in_pos, ids, "incoming"); }
void FramedGraph::set_out_order(int v, const std::vector<int>& ids) { reorder(out_order[v], out_pos, ids, "outgoing"); }

void FramedGraph::validate() const {
    for (const auto& e : edges)
        if (e.tail >= e.head) throw ValidationError("edge " + std::to_string(e.id) + " is not forward");
    for (int v = 0; v < vertex_count; ++v) {
        for (size_t k = 0; k < in_order[v].size(); ++k)
            if (edges[in_order[v][k]].head != v || in_pos[in_order[v][k]] != static_cast<int>(k))
                throw ValidationError("incoming framing at vertex " + std::to_string(v) + " is inconsistent");
        for (size_t k = 0; k < out_order[v].size(); ++k)
            if (edges[out_order[v][k]].tail != v || out_pos[out_order[v][k]] != static_cast<int>(k))
                throw ValidationError("outgoing framing at vertex " + std::to_string(v) + " is inconsistent");
    }
}

std::vector<int> route_vertices(const Route& r, const FramedGraph& g) {
    std::vector<int> v;
    if (r.empty()) return v;
    v.push_back(g.edges[r[0]].tail);
    for (int e : r) v.push_back(g.edges[e].head);
    return v;
}

std::string format_route(const Route& r) {
    std::string out = "(";
    for (size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + std::to_string(r[k]);
    return out + ")";
}

std::vector<Route> routes(const FramedGraph& g, int cap) {
    std::vector<Route> out;
    Route cur;
    int limit = cap < 0 ? size_cap(200000) : cap;
    std::function<void(int)> go = [&](int v) {
        if (v == g.last()) {
            out.push_back(cur);
            check_cap(static_cast<int>(out.size()), limit, "routes");
            return;
        }
        for (int e : g.out_order[v]) {
            cur.push_back(e);
            go(g.edges[e].head);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

std::vector<SharedSegment> shared_segments(const Route& p, const Route& q, const FramedGraph& g) {
    auto pv = route_vertices(p, g), qv = route_vertices(q, g);
    std::vector<int> where(g.vertex_count, -1);
    for (size_t k = 0; k < qv.size(); ++k) where[qv[k]] = static_cast<int>(k);
    std::vector<SharedSegment> out;
    size_t i = 0;
    while (i < pv.size()) {
        int qi = where[pv[i]];
        if (qi < 0) {
            ++i;
            continue;
        }
        size_t j = i;
        int qj = qi;
        while (j < p.size() && qj < static_cast<int>(q.size()) && p[j] == q[qj]) ++j, ++qj;
        SharedSegment s;
        s.from = pv[i];
        s.to = pv[j];
        s.p_in = i > 0 ? p[i - 1] : -1;
        s.q_in = qi > 0 ? q[qi - 1] : -1;
        s.p_out = j < p.size() ? p[j] : -1;
        s.q_out = qj < static_cast<int>(q.size()) ? q[qj] : -1;
        if (s.p_in >= 0 && s.q_in >= 0 && s.p_out >= 0 && s.q_out >= 0) {
            bool in_less = g.in_pos[s.p_in] < g.in_pos[s.q_in];
            bool out_less = g.out_pos[s.p_out] < g.out_pos[s.q_out];
            s.conflict = in_less != out_less;
        }
        out.push_back(s);
        i = j + 1;
    }
    return out;
}

bool coherent(const Route& p, const Route& q, const FramedGraph& g) {
    for (const auto& s : shared_segments(p, q, g))
        if (s.conflict) return false;
    return true;
}

std::pair<Route, Route> resolvents(const Route& p, const Route& q, const FramedGraph& g) {
    std::vector<int> cuts;
    for (const auto& s : shared_segments(p, q, g))
        if (s.conflict) cuts.push_back(s.from);
    if (cuts.empty()) throw ValidationError("routes " + format_route(p) + " and " + format_route(q) + " are coherent");
    // Swap the tails of the two routes at the entry vertex of every conflict.
    auto splice = [&](const Route& a, const Route& b) {
        Route out;
        const Route* cur = &a;
        const Route* other = &b;
        size_t next_cut = 0;
        auto pos_of = [&](const Route& r, int v) {
            auto vs = route_vertices(r, g);
            return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
        };
        int at = 0;  // edge index in *cur
        while (true) {
            int stop = next_cut < cuts.size() ? pos_of(*cur, cuts[next_cut]) : static_cast<int>(cur->size());
            for (int k = at; k < stop; ++k) out.push_back((*cur)[k]);
            if (next_cut == cuts.size()) break;
            std::swap(cur, other);
            at = pos_of(*cur, cuts[next_cut]);
            ++next_cut;
        }
        return out;
    };
    return {splice(p, q), splice(q, p)};
}

bool minimal_conflict(const Route& p, const Route& q, const FramedGraph& g) {
    int conflicts = 0;
    const SharedSegment* hit = nullptr;
    auto segs = shared_segments(p, q, g);
    for (const auto& s : segs)
        if (s.conflict) ++conflicts, hit = &s;
    if (conflicts != 1) return false;
    return std::abs(g.in_pos[hit->p_in] - g.in_pos[hit->q_in]) == 1 &&
           std::abs(g.out_pos[hit->p_out] - g.out_pos[hit->q_out]) == 1;
}

std::optional<AdmissibilityWitness> admissibility_witness(const FramedGraph& g, const std::vector<Route>& rs,
                                                          const std::vector<mpq_class>& h) {
    if (h.size() != rs.size()) throw ValidationError("height must be given on every route");
    std::map<Route, int> index;
    for (size_t k = 0; k < rs.size(); ++k) index[rs[k]] = static_cast<int>(k);
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = i + 1; j < rs.size(); ++j) {
            if (!minimal_conflict(rs[i], rs[j], g)) continue;
            auto [a, b] = resolvents(rs[i], rs[j], g);
            int ia = index.at(a), ib = index.at(b);
            mpq_class lhs = h[i] + h[j], rhs = h[ia] + h[ib];
            if (!(lhs > rhs)) return AdmissibilityWitness{static_cast<int>(i), static_cast<int>(j), ia, ib, lhs, rhs};
        }
    return std::nullopt;
}

bool is_admissible(const FramedGraph& g, const std::vector<Route>& rs, const std::vector<mpq_class>& h) {
    return !admissibility_witness(g, rs, h).has_value();
}

mpq_class dkk_height(const Route& r, const FramedGraph& g, const mpq_class& eps) {
    if (eps <= 0) throw ValidationError("epsilon must be positive");
    int k = static_cast<int>(r.size());
    std::vector<mpq_class> pw(k + 1, 1);
    for (int i = 1; i <= k; ++i) pw[i] = pw[i - 1] * eps;
    mpq_class sum = 0;
    for (int a = 0; a < k; ++a) {
        int in = g.edges[r[a]].head == g.last() ? 0 : g.in_pos[r[a]];
        for (int c = a + 1; c < k; ++c) {
            int out = g.edges[r[c]].tail == 0 ? 0 : g.out_pos[r[c]];
            sum += pw[c - a] * (in + out) * (in + out);
        }
    }
    return sum;
}

std::vector<std::vector<char>> coherence_matrix(const FramedGraph& g, const std::vector<Route>& rs) {
    size_t m = rs.size();
    std::vector<std::vector<char>> ok(m, std::vector<char>(m, 1));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) ok[i][j] = ok[j][i] = coherent(rs[i], rs[j], g);
    return ok;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
    for (auto w : b)
        if (w) return true;
    return false;
}

int popcount(const Bits& b) {
    int c = 0;
    for (auto w : b) c += __builtin_popcountll(w);
    return c;
}

}  // namespace

std::vector<Clique> max_cliques(const FramedGraph& g, const std::vector<Route>& rs, int cap) {
    int m = static_cast<int>(rs.size());
    size_t words = (m + 63) / 64;
    auto ok = coherence_matrix(g, rs);
    std::vector<Bits> nb(m, Bits(words, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && ok[i][j]) nb[i][j / 64] |= 1ull << (j % 64);
    int limit = cap < 0 ? size_cap(200000) : cap;
    std::vector<Clique> out;
    Clique r;
    // Bron-Kerbosch with pivoting.
    std::function<void(Bits, Bits)> bk = [&](Bits p, Bits x) {
        if (!any(p) && !any(x)) {
            Clique c = r;
            std::sort(c.begin(), c.end());
            out.push_back(c);
            check_cap(static_cast<int>(out.size()), limit, "maximal cliques");
            return;
        }
        int pivot = -1, best = -1;
        for (size_t w = 0; w < words; ++w)
            for (auto v = p[w] | x[w]; v; v &= v - 1) {
                int u = static_cast<int>(w * 64 + __builtin_ctzll(v));
                Bits t(words);
                for (size_t k = 0; k < words; ++k) t[k] = p[k] & nb[u][k];
                int c = popcount(t);
                if (c > best) best = c, pivot = u;
            }
        Bits cand(words);
        for (size_t k = 0; k < words; ++k) cand[k] = p[k] & ~nb[pivot][k];
        for (size_t w = 0; w < words; ++w)
            for (auto v = cand[w]; v; v &= v - 1) {
                int u = static_cast<int>(w * 64 + __builtin_ctzll(v));
                Bits p2(words), x2(words);
                for (size_t k = 0; k < words; ++k) p2[k] = p[k] & nb[u][k], x2[k] = x[k] & nb[u][k];
                r.push_back(u);
                bk(p2, x2);
                r.pop_back();
                p[u / 64] &= ~(1ull << (u % 64));
                x[u / 64] |= 1ull << (u % 64);
            }
    };
    Bits all(words, 0);
    for (int i = 0; i < m; ++i) all[i / 64] |= 1ull << (i % 64);
    bk(all, Bits(words, 0));
    std::sort(out.begin(), out.end());
    size_t expect = g.edge_count() - g.vertex_count + 2;
    for (const auto& c : out)
        if (c.size() != expect)
            throw std::logic_error("maximal clique of size " + std::to_string(c.size()) + ", expected " +
                                   std::to_string(expect));
    return out;
}

Netflow unit_netflow(const FramedGraph& g) {
    Netflow a(g.vertex_count, 0);
    a[0] = 1;
    a[g.last()] = -1;
    return a;
}

Netflow shifted_indegrees(const FramedGraph& g) {
    Netflow a(g.vertex_count, 0);
    long long sum = 0;
    for (int v = 1; v < g.last(); ++v) sum += a[v] = g.indegree(v) - 1;
    a[g.last()] = -sum;
    return a;
}

static void check_netflow(const FramedGraph& g, const Netflow& a) {
    if (static_cast<int>(a.size()) != g.vertex_count) throw ValidationError("netflow has the wrong length");
    if (std::accumulate(a.begin(), a.end(), 0LL) != 0) throw ValidationError("netflow does not sum to zero");
}

bool is_flow(const FramedGraph& g, const Netflow& a, const Flow& f) {
    if (static_cast<int>(f.size()) != g.edge_count()) return false;
    for (auto x : f)
        if (x < 0) return false;
    for (int v = 0; v < g.vertex_count; ++v) {
        long long in = 0, out = 0;
        for (int e : g.in_order[v]) in += f[e];
        for (int e : g.out_order[v]) out += f[e];
        if (in + a[v] != out) return false;
    }
    return true;
}

std::vector<Flow> integer_flows(const FramedGraph& g, const Netflow& a, long long cap) {
    check_netflow(g, a);
    long long limit = cap < 0 ? size_cap(2000000) : cap;
    std::vector<Flow> out;
    Flow f(g.edge_count(), 0);
    std::vector<long long> inflow(g.vertex_count, 0);
    std::function<void(int)> at_vertex;
    // Spread `amount` over the outgoing edges of v starting at index k.
    std::function<void(int, size_t, long long)> spread = [&](int v, size_t k, long long amount) {
        const auto& outs = g.out_order[v];
        if (k + 1 == outs.size()) {
            int e = outs[k];
            f[e] = amount;
            inflow[g.edges[e].head] += amount;
            at_vertex(v + 1);
            inflow[g.edges[e].head] -= amount;
            f[e] = 0;
            return;
        }
        int e = outs[k];
        for (long long x = 0; x <= amount; ++x) {
            f[e] = x;
            inflow[g.edges[e].head] += x;
            spread(v, k + 1, amount - x);
            inflow[g.edges[e].head] -= x;
        }
        f[e] = 0;
    };
    at_vertex = [&](int v) {
        if (v == g.last()) {
            if (inflow[v] + a[v] == 0) {
                out.push_back(f);
                if (static_cast<long long>(out.size()) > limit) throw CapError("integer flow count exceeds cap");
            }
            return;
        }
        long long amount = inflow[v] + a[v];
        if (amount < 0) return;
        if (g.out_order[v].empty()) {
            if (amount == 0) at_vertex(v + 1);
            return;
        }
        spread(v, 0, amount);
    };
    at_vertex(0);
    return out;
}

std::uint64_t kostant_enumerated(const FramedGraph& g, const Netflow& a) {
    return integer_flows(g, a).size();
}

std::uint64_t kostant(const FramedGraph& g, const Netflow& a) {
    check_netflow(g, a);
    // State after settling vertices < v: the inflow already delivered to v..last.
    std::map<std::pair<int, std::vector<long long>>, std::uint64_t> memo;
    std::function<std::uint64_t(int, std::vector<long long>&)> solve = [&](int v, std::vector<long long>& in) {
        if (v == g.last()) return static_cast<std::uint64_t>(in[v] + a[v] == 0);
        std::vector<long long> key(in.begin() + v, in.end());
        auto it = memo.find({v, key});
        if (it != memo.end()) return it->second;
        std::uint64_t total = 0;
        long long amount = in[v] + a[v];
        const auto& outs = g.out_order[v];
        if (amount >= 0) {
            if (outs.empty()) {
                if (amount == 0) total = solve(v + 1, in);
            } else {
                std::function<void(size_t, long long)> spread = [&](size_t k, long long left) {
                    int head = g.edges[outs[k]].head;
                    if (k + 1 == outs.size()) {
                        in[head] += left;
                        total += solve(v + 1, in);
                        in[head] -= left;
                        return;
                    }
                    for (long long x = 0; x <= left; ++x) {
                        in[head] += x;
                        spread(k + 1, left - x);
                        in[head] -= x;
                    }
                };
                spread(0, amount);
            }
        }
        memo[{v, key}] = total;
        return total;
    };
    std::vector<long long> in(g.vertex_count, 0);
    return solve(0, in);
}

mpz_class lidskii_volume(const FramedGraph& g, const Netflow& a) {
    check_netflow(g, a);
    int n = g.last();
    for (int i = 0; i < n; ++i)
        if (a[i] < 0) throw ValidationError("Lidskii formula needs a nonnegative netflow away from the sink");
    int m = g.edge_count();
    int total = m - n;
    if (total < 0) return 0;
    std::vector<int> o(n);
    for (int i = 0; i < n; ++i) o[i] = g.outdegree(i) - 1;
    mpz_class fact_total;
    mpz_fac_ui(fact_total.get_mpz_t(), total);
    mpz_class sum = 0;
    std::vector<int> j(n, 0);
    // Weak compositions j of m-n dominating the shifted outdegrees.
    std::function<void(int, int, int, int)> rec = [&](int i, int left, int jsum, int osum) {
        if (i == n) {
            if (left != 0) return;
            mpz_class term = fact_total;
            for (int k = 0; k < n; ++k) {
                mpz_class f;
                mpz_fac_ui(f.get_mpz_t(), j[k]);
                term /= f;
                mpz_class p;
                mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(a[k])).get_mpz_t(), j[k]);
                term *= p;
            }
            if (term == 0) return;
            Netflow b(n + 1, 0);
            for (int k = 0; k < n; ++k) b[k] = j[k] - o[k];
            term *= mpz_class(static_cast<unsigned long>(kostant(g, b)));
            sum += term;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            if (jsum + x < osum + o[i]) continue;
            j[i] = x;
            rec(i + 1, left - x, jsum + x, osum + o[i]);
        }
        j[i] = 0;
    };
    rec(0, total, 0, 0);
    return sum;
}

Flow omega(const Clique& c, const std::vector<Route>& rs, const FramedGraph& g) {
    size_t expect = g.edge_count() - g.vertex_count + 2;
    if (c.size() != expect) throw ValidationError("clique is not maximal");
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (!coherent(rs[c[i]], rs[c[j]], g)) throw ValidationError("routes are not pairwise coherent");
    std::vector<std::set<Route>> prefixes(g.edge_count());
    for (int r : c) {
        const Route& route = rs[r];
        for (size_t k = 0; k < route.size(); ++k) prefixes[route[k]].insert(Route(route.begin(), route.begin() + k + 1));
    }
    Flow f(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (prefixes[e].empty()) throw std::logic_error("maximal clique misses edge " + std::to_string(e));
        f[e] = static_cast<long long>(prefixes[e].size()) - 1;
    }
    return f;
}

std::pair<FramedGraph, Netflow> simplify_multiedges(const FramedGraph& g, const Netflow& a) {
    check_netflow(g, a);
    // Every parallel copy after the first (in the outgoing frame at the tail) is
    // subdivided by a fresh vertex placed right after the tail. Flows restrict
    // bijectively, so the flow polytopes are integrally equivalent.
    std::vector<char> split(g.edge_count(), 0);
    std::vector<int> extra(g.vertex_count, 0);
    for (int u = 0; u < g.vertex_count; ++u) {
        std::set<int> seen;
        for (int e : g.out_order[u])
            if (!seen.insert(g.edges[e].head).second) split[e] = 1, ++extra[u];
    }
    std::vector<int> new_index(g.vertex_count);
    int count = 0;
    for (int u = 0; u < g.vertex_count; ++u) new_index[u] = count, count += 1 + extra[u];
    FramedGraph h(count);
    Netflow b(count, 0);
    for (int u = 0; u < g.vertex_count; ++u) b[new_index[u]] = a[u];
    std::vector<int> first(g.edge_count()), second(g.edge_count());
    std::vector<int> next_free(g.vertex_count, 1);
    for (const auto& e : g.edges) {
        int u = new_index[e.tail], v = new_index[e.head];
        if (!split[e.id]) {
            first[e.id] = second[e.id] = h.add_edge(u, v);
        } else {
            int w = u + next_free[e.tail]++;
            first[e.id] = h.add_edge(u, w);
            second[e.id] = h.add_edge(w, v);
        }
    }
    for (int u = 0; u < g.vertex_count; ++u) {
        std::vector<int> outs, ins;
        for (int e : g.out_order[u]) outs.push_back(first[e]);
        for (int e : g.in_order[u]) ins.push_back(second[e]);
        h.set_out_order(new_index[u], outs);
        h.set_in_order(new_index[u], ins);
    }
    h.validate();
    return {h, b};
}

FramedGraph example_graph() {
    FramedGraph g(4);
    int a = g.add_edge(0, 1), b = g.add_edge(0, 1);
    g.add_edge(0, 2);
    int e12 = g.add_edge(1, 2), e13 = g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.set_in_order(1, {a, b});
    g.set_out_order(1, {e12, e13});
    return g;
}

FramedGraph doubled_path(int n) {
    if (n < 1) throw ValidationError("path length must be positive");
    FramedGraph g(n + 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1), g.add_edge(i, i + 1);
    return g;
}

FramedGraph parallel_edges(int k) {
    if (k < 1) throw ValidationError("need at least one edge");
    FramedGraph g(2);
    for (int i = 0; i < k; ++i) g.add_edge(0, 1);
    return g;
}

}  // namespace ptl
