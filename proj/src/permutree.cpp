#include "ptl/permutree.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <unordered_map>

#include "ptl/vectors.hpp"

namespace ptl {

char sym_letter(Sym s) {
    switch (s) {
        case Sym::none: return 'n';
        case Sym::down: return 'd';
        case Sym::up: return 'u';
        case Sym::updown: return 'x';
    }
    return '?';
}

std::string Decoration::to_string() const {
    std::string s;
    for (Sym x : sym) s += sym_letter(x);
    return s;
}

Decoration Decoration::from(std::vector<Sym> s) {
    Decoration d;
    d.sym = std::move(s);
    if (!d.sym.empty()) {
        for (int k : {0, d.n() - 1}) {
            if (d.sym[k] != Sym::none) {
                d.sym[k] = Sym::none;
                d.normalized_warning = true;
            }
        }
    }
    return d;
}

Decoration Decoration::parse(const std::string& letters) {
    std::vector<Sym> s;
    for (char c : letters) {
        switch (c) {
            case 'n': s.push_back(Sym::none); break;
            case 'd': s.push_back(Sym::down); break;
            case 'u': s.push_back(Sym::up); break;
            case 'x': s.push_back(Sym::updown); break;
            default:
                throw ValidationError(std::string("bad decoration letter '") + c + "' (use n/d/u/x)");
        }
    }
    if (s.empty()) throw ValidationError("empty decoration");
    return from(std::move(s));
}

Decoration Decoration::uniform(int n, Sym s) { return from(std::vector<Sym>(n, s)); }

std::vector<Decoration> all_decorations(int n, const std::vector<Sym>& alphabet) {
    std::vector<Decoration> out;
    int inner = std::max(n - 2, 0);
    std::vector<int> digit(inner, 0);
    int a = static_cast<int>(alphabet.size());
    while (true) {
        std::vector<Sym> s(n, Sym::none);
        for (int k = 0; k < inner; ++k) s[k + 1] = alphabet[digit[k]];
        out.push_back(Decoration::from(s));
        int k = inner - 1;
        while (k >= 0 && ++digit[k] == a) digit[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

std::vector<Decoration> all_decorations(int n) {
    return all_decorations(n, {Sym::none, Sym::down, Sym::up, Sym::updown});
}

std::vector<Pair> Permutree::edges() const {
    std::vector<Pair> out;
    for (int x = 1; x <= n(); ++x)
        for (int y : parent[x])
            if (y > 0) out.emplace_back(x, y);
    return out;
}

int Permutree::edge_count() const {
    int c = 0;
    for (int x = 1; x <= n(); ++x) {
        for (int y : parent[x]) c += y >= 0;
        for (int y : child[x]) c += y == 0;
    }
    return c;
}

namespace {

struct Str {
    int node;  // 0 for the bottom boundary
    int slot;
};

}  // namespace

Permutree insert(const Perm& p, const Decoration& delta) {
    require_permutation(p);
    int n = delta.n();
    if (static_cast<int>(p.size()) != n) throw ValidationError("permutation and decoration sizes differ");

    Permutree t;
    t.delta = delta;
    t.child.assign(n + 1, {-1, -1});
    t.parent.assign(n + 1, {-1, -1});

    // Wall at column u separates gap u-1 from gap u. Down walls live below
    // their node, up walls above it.
    std::vector<char> wall(n + 2, 0);
    for (int u = 1; u <= n; ++u) wall[u] = has_down(delta.at(u));

    std::vector<Str> strings;
    std::vector<int> owner(n + 1, -1);
    auto zone = [&](int g) {
        int lo = g, hi = g;
        while (lo > 0 && !wall[lo]) --lo;
        while (hi < n && !wall[hi + 1]) ++hi;
        return std::pair{lo, hi};
    };
    auto claim = [&](int g, int id) {
        auto [lo, hi] = zone(g);
        for (int k = lo; k <= hi; ++k) owner[k] = id;
    };
    for (int g = 0; g <= n; ++g) {
        if (owner[g] < 0) {
            strings.push_back({0, static_cast<int>(strings.size())});
            claim(g, static_cast<int>(strings.size()) - 1);
        }
    }
    auto catch_string = [&](int id, int v, int slot) {
        const Str& s = strings[id];
        t.child[v][slot] = s.node;
        if (s.node > 0) t.parent[s.node][s.slot] = v;
    };

    for (int v : p) {
        Sym sv = delta.at(v);
        if (has_down(sv)) {
            catch_string(owner[v - 1], v, 0);
            catch_string(owner[v], v, 1);
            wall[v] = 0;
        } else {
            catch_string(owner[v - 1], v, 0);
        }
        if (has_up(sv)) {
            wall[v] = 1;
            strings.push_back({v, 0});
            claim(v - 1, static_cast<int>(strings.size()) - 1);
            strings.push_back({v, 1});
            claim(v, static_cast<int>(strings.size()) - 1);
        } else {
            strings.push_back({v, 0});
            claim(v - 1, static_cast<int>(strings.size()) - 1);
        }
    }
    for (int g = 0; g <= n; ++g) {
        const Str& s = strings[owner[g]];
        if (s.node > 0) t.parent[s.node][s.slot] = 0;
    }
    return t;
}

std::uint32_t component_through(const Permutree& t, int i, int neighbour) {
    if (neighbour <= 0) return 0;
    std::uint32_t seen = 1u << (i - 1);
    std::uint32_t comp = 0;
    std::vector<int> stack{neighbour};
    seen |= 1u << (neighbour - 1);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp |= 1u << (x - 1);
        for (const auto* slots : {&t.child[x], &t.parent[x]})
            for (int y : *slots)
                if (y > 0 && !(seen >> (y - 1) & 1)) {
                    seen |= 1u << (y - 1);
                    stack.push_back(y);
                }
    }
    return comp;
}

void check_permutree(const Permutree& t) {
    int n = t.n();
    auto fail = [](const std::string& m) { throw ValidationError("invalid permutree: " + m); };
    if (static_cast<int>(t.child.size()) != n + 1 || static_cast<int>(t.parent.size()) != n + 1)
        fail("slot tables have wrong size");
    int internal = 0;
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k < 2; ++k) {
            bool cexists = k < t.child_arity(i), pexists = k < t.parent_arity(i);
            if (cexists != (t.child[i][k] >= 0)) fail("child arity at node " + std::to_string(i));
            if (pexists != (t.parent[i][k] >= 0)) fail("parent arity at node " + std::to_string(i));
            int y = t.parent[i][k];
            if (y > 0) {
                ++internal;
                if (std::find(t.child[y].begin(), t.child[y].end(), i) == t.child[y].end())
                    fail("parent/child mismatch at node " + std::to_string(i));
            }
            int c = t.child[i][k];
            if (c > 0 && std::find(t.parent[c].begin(), t.parent[c].end(), i) == t.parent[c].end())
                fail("child/parent mismatch at node " + std::to_string(i));
        }
        auto check_side = [&](int nb, bool left) {
            std::uint32_t comp = component_through(t, i, nb);
            for (int x = 1; x <= n; ++x)
                if (comp >> (x - 1) & 1) {
                    if (left && x > i) fail("label separation at node " + std::to_string(i));
                    if (!left && x < i) fail("label separation at node " + std::to_string(i));
                }
        };
        if (t.child_arity(i) == 2) {
            check_side(t.child[i][0], true);
            check_side(t.child[i][1], false);
        }
        if (t.parent_arity(i) == 2) {
            check_side(t.parent[i][0], true);
            check_side(t.parent[i][1], false);
        }
    }
    if (internal != n - 1) fail("expected n-1 internal edges");
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++count;
        for (const auto* slots : {&t.child[x], &t.parent[x]})
            for (int y : *slots)
                if (y > 0 && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
    }
    if (count != n) fail("not connected");
    int expected = n + 1;
    for (Sym s : t.delta.sym) expected += has_down(s) + has_up(s);
    if (t.edge_count() != expected) fail("edge count formula");
}

bool is_linear_extension(const Permutree& t, const Perm& p) {
    if (static_cast<int>(p.size()) != t.n() || !is_permutation(p)) return false;
    auto pos = inverse(p);
    for (auto [x, y] : t.edges())
        if (pos[x - 1] > pos[y - 1]) return false;
    return true;
}

std::vector<Perm> linear_extensions(const Permutree& t) {
    int n = t.n();
    std::vector<int> pending(n + 1, 0);
    for (auto [x, y] : t.edges()) ++pending[y];
    std::vector<Perm> out;
    Perm cur;
    std::vector<char> used(n + 1, 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v] || pending[v]) continue;
            used[v] = 1;
            cur.push_back(v);
            for (int y : t.parent[v])
                if (y > 0) --pending[y];
            rec();
            for (int y : t.parent[v])
                if (y > 0) ++pending[y];
            cur.pop_back();
            used[v] = 0;
        }
    };
    rec();
    return out;
}

std::vector<std::vector<char>> descendants(const Permutree& t) {
    int n = t.n();
    std::vector<std::vector<char>> d(n + 1, std::vector<char>(n + 1, 0));
    for (int x = 1; x <= n; ++x) {
        std::vector<int> stack;
        for (int c : t.child[x])
            if (c > 0) stack.push_back(c);
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            if (d[x][y]) continue;
            d[x][y] = 1;
            for (int c : t.child[y])
                if (c > 0) stack.push_back(c);
        }
    }
    return d;
}

Permutree rotate(const Permutree& t, int i, int j) {
    int n = t.n();
    if (i < 1 || j < 1 || i > n || j > n || i >= j)
        throw ValidationError("rotation needs an edge i -> j with i < j");
    int ps = t.parent_arity(i) == 2 ? 1 : 0;
    if (t.parent[i][ps] != j || t.child[j][0] != i)
        throw ValidationError("no edge " + std::to_string(i) + " -> " + std::to_string(j));
    int ds = t.child_arity(i) == 2 ? 1 : 0;
    int dval = t.child[i][ds];
    int uval = t.parent[j][0];

    Permutree r = t;
    r.parent[i][ps] = uval;
    r.child[j][0] = dval;
    r.child[i][ds] = j;
    r.parent[j][0] = i;
    if (uval > 0)
        for (int& c : r.child[uval])
            if (c == j) c = i;
    if (dval > 0)
        for (int& a : r.parent[dval])
            if (a == i) a = j;
    return r;
}

std::uint32_t edge_cut(const Permutree& t, int i, int j) {
    // Child side of the edge i -> j.
    return component_through(t, j, i);
}

std::vector<std::uint32_t> edge_cuts(const Permutree& t) {
    std::vector<std::uint32_t> out;
    for (auto [x, y] : t.edges()) out.push_back(edge_cut(t, x, y));
    std::sort(out.begin(), out.end());
    return out;
}

int RotationLattice::find(const PairSet& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

RotationLattice rotation_lattice(const Decoration& delta, int cap) {
    int n = delta.n();
    check_cap(n, cap > 0 ? cap : size_cap(7), "rotation_lattice n");
    RotationLattice lat;
    auto add = [&](Permutree t) {
        PairSet key = inversion_set(t);
        auto it = lat.index.find(key);
        if (it != lat.index.end()) return it->second;
        int id = static_cast<int>(lat.elems.size());
        lat.index.emplace(key, id);
        lat.keys.push_back(std::move(key));
        lat.elems.push_back(std::move(t));
        lat.up.emplace_back();
        return id;
    };
    add(insert(identity_perm(n), delta));
    for (size_t k = 0; k < lat.elems.size(); ++k) {
        std::vector<int> ups;
        for (auto [x, y] : lat.elems[k].edges())
            if (x < y) ups.push_back(add(rotate(lat.elems[k], x, y)));
        std::sort(ups.begin(), ups.end());
        lat.up[k] = std::move(ups);
    }
    return lat;
}

unsigned long long count_permutrees(const Decoration& delta) {
    int n = delta.n();
    if (n == 0) return 1;
    // Up behaves like down for counting; updown nodes cut the problem into
    // independent segments in which their endpoints act like none.
    unsigned long long total = 1;
    int start = 1;
    for (int b = 2; b <= n; ++b) {
        if (b != n && delta.at(b) != Sym::updown) continue;
        int m = b - start + 1;
        std::vector<char> down(m, 0);
        for (int k = 1; k + 1 < m; ++k) {
            Sym s = delta.at(start + k);
            down[k] = s == Sym::down || s == Sym::up;
        }
        std::unordered_map<std::uint32_t, unsigned long long> memo;
        std::function<unsigned long long(std::uint32_t)> f = [&](std::uint32_t set) -> unsigned long long {
            if (set == 0) return 1;
            auto it = memo.find(set);
            if (it != memo.end()) return it->second;
            unsigned long long v = 0;
            for (int r = 0; r < m; ++r) {
                if (!(set >> r & 1)) continue;
                if (down[r]) {
                    std::uint32_t below = set & ((1u << r) - 1);
                    std::uint32_t above = set & ~((2u << r) - 1);
                    v += f(below) * f(above);
                } else {
                    v += f(set & ~(1u << r));
                }
            }
            memo.emplace(set, v);
            return v;
        };
        total *= f(m >= 32 ? ~0u : (1u << m) - 1);
        start = b;
    }
    return total;
}

std::vector<int> permutreehedron_vertex(const Permutree& t) {
    // Sizes are taken over the components of T minus v_i behind each slot;
    // with directed descendants only the hyperplane sum fails for up nodes.
    int n = t.n();
    auto size = [&](int i, int nb) { return std::popcount(component_through(t, i, nb)); };
    std::vector<int> a(n);
    for (int i = 1; i <= n; ++i) {
        int below = 0;
        for (int c : t.child[i])
            if (c >= 0) below += size(i, c);
        int v = 1 + below;
        Sym s = t.delta.at(i);
        if (has_down(s)) v += size(i, t.child[i][0]) * size(i, t.child[i][1]);
        if (has_up(s)) v -= size(i, t.parent[i][0]) * size(i, t.parent[i][1]);
        a[i - 1] = v;
    }
    return a;
}

std::vector<int> permutreehedron_direction(int n) {
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - 2 * i;
    return v;
}

}  // namespace ptl
