#include "ptl/s_weak_order.hpp"

#include <algorithm>
#include <functional>

namespace ptl {

void require_composition(const SComp& s, bool strict) {
    if (s.empty()) throw ValidationError("empty composition");
    for (int x : s) {
        if (x < 0) throw ValidationError("composition entries must be nonnegative");
        if (strict && x == 0) throw ValidationError("composition must be strict (no zero entries)");
    }
}

SComp parse_composition(const std::string& text) {
    SComp s = parse_int_list(text);
    require_composition(s, false);
    return s;
}

int total(const SComp& s) {
    int t = 0;
    for (int x : s) t += x;
    return t;
}

unsigned long long count_s_trees(const SComp& s) {
    require_composition(s, false);
    int n = static_cast<int>(s.size());
    unsigned long long prod = 1, tail = 0;
    for (int i = n; i >= 2; --i) {
        tail += s[i - 1];
        prod *= 1 + tail;
    }
    return prod;
}

std::string STree::to_string() const {
    std::function<std::string(int)> rec = [&](int v) -> std::string {
        if (v == 0) return "-";
        std::string out = std::to_string(v) + "(";
        for (size_t k = 0; k < children[v].size(); ++k) out += (k ? "," : "") + rec(children[v][k]);
        return out + ")";
    };
    return rec(n());
}

std::vector<std::pair<int, int>> leaves(const STree& t) {
    std::vector<std::pair<int, int>> out;
    std::function<void(int)> rec = [&](int v) {
        for (int k = 0; k < static_cast<int>(t.children[v].size()); ++k) {
            int c = t.children[v][k];
            if (c == 0) out.emplace_back(v, k);
            else rec(c);
        }
    };
    rec(t.n());
    return out;
}

std::vector<STree> all_s_trees(const SComp& s) {
    require_composition(s, false);
    int n = static_cast<int>(s.size());
    STree base;
    base.s = s;
    base.children.assign(n + 1, {});
    base.children[n].assign(s[n - 1] + 1, 0);
    std::vector<STree> cur{base};
    for (int a = n - 1; a >= 1; --a) {
        std::vector<STree> next;
        for (const auto& t : cur)
            for (auto [v, k] : leaves(t)) {
                STree u = t;
                u.children[v][k] = a;
                u.children[a].assign(s[a - 1] + 1, 0);
                next.push_back(std::move(u));
            }
        cur = std::move(next);
    }
    return cur;
}

bool is_stirling(const SWord& w, const SComp& s) {
    int n = static_cast<int>(s.size());
    std::vector<int> count(n + 1, 0);
    for (int x : w) {
        if (x < 1 || x > n) return false;
        ++count[x];
    }
    for (int i = 1; i <= n; ++i)
        if (count[i] != s[i - 1]) return false;
    for (int a = 1; a <= n; ++a) {
        if (!count[a]) continue;
        auto [lo, hi] = block(w, a);
        for (int k = lo; k <= hi; ++k)
            if (w[k] > a) return false;
    }
    return true;
}

void require_stirling(const SWord& w, const SComp& s) {
    if (!is_stirling(w, s)) throw ValidationError("not a Stirling s-permutation: " + format_sword(w));
}

SWord parse_sword(const std::string& text) {
    if (text.find(',') != std::string::npos) return parse_int_list(text);
    SWord w;
    for (char c : text) {
        if (c < '1' || c > '9') throw ValidationError("bad letter in '" + text + "'");
        w.push_back(c - '0');
    }
    return w;
}

std::string format_sword(const SWord& w) { return format_word(w); }

std::vector<SWord> all_stirling(const SComp& s) {
    require_composition(s, true);
    int n = static_cast<int>(s.size());
    std::vector<SWord> cur{SWord(s[n - 1], n)};
    for (int a = n - 1; a >= 1; --a) {
        std::vector<SWord> next;
        for (const auto& w : cur)
            for (size_t g = 0; g <= w.size(); ++g) {
                SWord u = w;
                u.insert(u.begin() + g, s[a - 1], a);
                next.push_back(std::move(u));
            }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

SWord sorted_word(const SComp& s) {
    SWord w;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) w.insert(w.end(), s[i - 1], i);
    return w;
}

SWord reverse_sorted_word(const SComp& s) {
    SWord w;
    for (int i = static_cast<int>(s.size()); i >= 1; --i) w.insert(w.end(), s[i - 1], i);
    return w;
}

SWord tree_to_word(const STree& t) {
    for (int x : t.s)
        if (x == 0) throw ValidationError("tree to word needs a strict composition");
    SWord w;
    std::function<void(int)> rec = [&](int v) {
        if (v == 0) return;
        const auto& ch = t.children[v];
        for (size_t k = 0; k < ch.size(); ++k) {
            if (k) w.push_back(v);
            rec(ch[k]);
        }
    };
    rec(t.n());
    return w;
}

STree word_to_tree(const SWord& w, const SComp& s) {
    require_composition(s, true);
    require_stirling(w, s);
    int n = static_cast<int>(s.size());
    STree t;
    t.s = s;
    t.children.assign(n + 1, {});
    std::function<int(int, int)> rec = [&](int lo, int hi) -> int {
        if (lo >= hi) return 0;
        int m = *std::max_element(w.begin() + lo, w.begin() + hi);
        int start = lo;
        for (int k = lo; k <= hi; ++k) {
            if (k == hi || w[k] == m) {
                t.children[m].push_back(rec(start, k));
                start = k + 1;
            }
        }
        return m;
    };
    rec(0, static_cast<int>(w.size()));
    return t;
}

bool InvMultiset::leq(const InvMultiset& o) const {
    for (size_t k = 0; k < m.size(); ++k)
        if (m[k] > o.m[k]) return false;
    return true;
}

std::string InvMultiset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int c = 1; c <= n; ++c)
        for (int a = 1; a < c; ++a)
            if (get(c, a)) {
                out += std::string(first ? "" : ",") + "(" + std::to_string(c) + "," + std::to_string(a) +
                       ")^" + std::to_string(get(c, a));
                first = false;
            }
    return out + "}";
}

std::pair<int, int> block(const SWord& w, int a) {
    int lo = -1, hi = -1;
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (w[k] == a) {
            if (lo < 0) lo = k;
            hi = k;
        }
    return {lo, hi};
}

InvMultiset inversion_multiset(const SWord& w, const SComp& s) {
    require_stirling(w, s);
    int n = static_cast<int>(s.size());
    InvMultiset m(n);
    for (int a = 1; a <= n; ++a) {
        auto [lo, hi] = block(w, a);
        for (int k = 0; k < lo; ++k)
            if (w[k] > a) m.set(w[k], a, m.get(w[k], a) + 1);
    }
    return m;
}

InvMultiset tree_inversion_multiset(const STree& t) {
    int n = t.n();
    std::vector<int> par(n + 1, 0), slot(n + 1, -1);
    for (int v = 1; v <= n; ++v)
        for (int k = 0; k < static_cast<int>(t.children[v].size()); ++k)
            if (int c = t.children[v][k]) {
                par[c] = v;
                slot[c] = k;
            }
    // Ancestor chain of x: pairs (ancestor, slot through which x is reached).
    auto chain = [&](int x) {
        std::vector<std::pair<int, int>> out;
        while (par[x]) {
            out.emplace_back(par[x], slot[x]);
            x = par[x];
        }
        return out;
    };
    InvMultiset m(n);
    for (int c = 1; c <= n; ++c)
        for (int a = 1; a < c; ++a) {
            auto ca = chain(a), cc = chain(c);
            int value = -1;
            for (auto [x, k] : ca)
                if (x == c) value = k;
            if (value < 0) {
                for (auto [x, k] : ca) {
                    auto it = std::find_if(cc.begin(), cc.end(), [&](auto& e) { return e.first == x; });
                    if (it != cc.end()) {
                        value = k < it->second ? 0 : t.s[c - 1];
                        break;
                    }
                }
            }
            m.set(c, a, value);
        }
    return m;
}

bool satisfies_transitivity(const InvMultiset& m) {
    for (int a = 1; a <= m.n; ++a)
        for (int b = a + 1; b <= m.n; ++b)
            for (int c = b + 1; c <= m.n; ++c)
                if (m.get(b, a) != 0 && m.get(c, a) < m.get(c, b)) return false;
    return true;
}

bool satisfies_planarity(const InvMultiset& m, const SComp& s) {
    for (int a = 1; a <= m.n; ++a)
        for (int b = a + 1; b <= m.n; ++b)
            for (int c = b + 1; c <= m.n; ++c)
                if (m.get(b, a) != s[b - 1] && m.get(c, b) < m.get(c, a)) return false;
    return true;
}

SWord word_from_multiset(const InvMultiset& m, const SComp& s) {
    int n = static_cast<int>(s.size());
    SWord w(s[n - 1], n);
    for (int a = n - 1; a >= 1; --a) {
        // Find the gap where each larger letter c occurs exactly |(c,a)| times before it.
        std::vector<int> seen(n + 1, 0);
        int gap = -1;
        for (int g = 0; g <= static_cast<int>(w.size()); ++g) {
            if (g > 0) ++seen[w[g - 1]];
            bool ok = true;
            for (int c = a + 1; c <= n && ok; ++c) ok = seen[c] == m.get(c, a);
            if (ok) {
                gap = g;
                break;
            }
        }
        if (gap < 0) throw ValidationError("not an inversion multiset: " + m.to_string());
        w.insert(w.begin() + gap, s[a - 1], a);
    }
    if (inversion_multiset(w, s) != m) throw ValidationError("not an inversion multiset: " + m.to_string());
    return w;
}

bool s_leq(const SWord& a, const SWord& b, const SComp& s) {
    return inversion_multiset(a, s).leq(inversion_multiset(b, s));
}

std::vector<Pair> ascents(const SWord& w) {
    std::vector<Pair> out;
    int n = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    for (int a = 1; a <= n; ++a) {
        auto [lo, hi] = block(w, a);
        if (lo < 0 || hi + 1 >= static_cast<int>(w.size())) continue;
        if (w[hi + 1] > a) out.emplace_back(a, w[hi + 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SWord transpose_ascent(const SWord& w, Pair asc) {
    auto [a, c] = asc;
    auto [lo, hi] = block(w, a);
    if (lo < 0 || hi + 1 >= static_cast<int>(w.size()) || w[hi + 1] != c || c <= a)
        throw ValidationError("(" + std::to_string(a) + "," + std::to_string(c) + ") is not an ascent");
    SWord u = w;
    u.erase(u.begin() + hi + 1);
    u.insert(u.begin() + lo, c);
    return u;
}

namespace {

struct Blocks {
    std::vector<int> lo, hi;  // indexed by letter
};

Blocks blocks_of(const SWord& w, int n) {
    Blocks b{std::vector<int>(n + 1, -1), std::vector<int>(n + 1, -1)};
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (b.lo[w[k]] < 0) b.lo[w[k]] = k;
        b.hi[w[k]] = k;
    }
    return b;
}

bool dependent(const SWord& w, const Blocks& bl, const InvMultiset& inv, const std::vector<Pair>& A,
               int a, int c, const SComp& s) {
    auto inA = [&](int x, int y) { return std::find(A.begin(), A.end(), Pair{x, y}) != A.end(); };
    if (inv.get(c, a) >= s[c - 1]) return false;
    int b = -1;
    for (int x = c - 1; x >= a; --x)
        if (bl.lo[x] <= bl.lo[a] && bl.hi[a] <= bl.hi[x]) {
            b = x;
            break;
        }
    int len = static_cast<int>(w.size());
    // The chain of directly following blocks is forced; walk it until c.
    while (b >= 0) {
        int hi = bl.hi[b];
        if (hi + 1 >= len) return false;
        int x = w[hi + 1];
        if (x == c) return inA(b, c);
        if (x <= b || x > c || !inA(b, x) || bl.lo[x] != hi + 1) return false;
        b = x;
    }
    return false;
}

}  // namespace

bool is_A_dependent(const SWord& w, const std::vector<Pair>& A, int a, int c, const SComp& s) {
    auto inv = inversion_multiset(w, s);
    return dependent(w, blocks_of(w, static_cast<int>(s.size())), inv, A, a, c, s);
}

SWord add_ascents(const SWord& w, const std::vector<Pair>& A, const SComp& s) {
    auto asc = ascents(w);
    for (auto p : A)
        if (std::find(asc.begin(), asc.end(), p) == asc.end())
            throw ValidationError("(" + std::to_string(p.first) + "," + std::to_string(p.second) +
                                  ") is not an ascent of " + format_sword(w));
    int n = static_cast<int>(s.size());
    InvMultiset inv = inversion_multiset(w, s);
    auto bl = blocks_of(w, n);
    InvMultiset m = inv;
    for (int c = 1; c <= n; ++c)
        for (int a = 1; a < c; ++a)
            if (dependent(w, bl, inv, A, a, c, s)) m.set(c, a, m.get(c, a) + 1);
    return word_from_multiset(m, s);
}

InvMultiset multiset_closure(const InvMultiset& start) {
    InvMultiset m = start;
    int n = m.n;
    std::vector<char> reach(n + 1);
    while (true) {
        InvMultiset next = m;
        for (int a = 1; a <= n; ++a) {
            // reach[b]: some path a = b_1 < ... < b with every step positive.
            std::fill(reach.begin(), reach.end(), 0);
            reach[a] = 1;
            for (int b = a; b <= n; ++b) {
                if (!reach[b]) continue;
                for (int x = b + 1; x <= n; ++x)
                    if (m.get(x, b) > 0) reach[x] = 1;
            }
            for (int c = a + 1; c <= n; ++c) {
                int best = m.get(c, a);
                for (int b = a + 1; b < c; ++b)
                    if (reach[b]) best = std::max(best, m.get(c, b));
                next.set(c, a, best);
            }
        }
        if (next == m) return m;
        m = std::move(next);
    }
}

SHasse s_hasse(const SComp& s, int cap) {
    require_composition(s, true);
    check_cap(total(s), cap > 0 ? cap : size_cap(10), "s_hasse |s|");
    SHasse h;
    auto words = all_stirling(s);
    std::vector<std::pair<int, SWord>> ranked;
    for (auto& w : words) {
        int t = 0;
        for (int v : inversion_multiset(w, s).m) t += v;
        ranked.emplace_back(t, std::move(w));
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    words.clear();
    for (auto& [t, w] : ranked) words.push_back(std::move(w));
    h.elems = words;
    for (int k = 0; k < static_cast<int>(words.size()); ++k) h.index[words[k]] = k;
    h.up.resize(words.size());
    for (int k = 0; k < static_cast<int>(words.size()); ++k) {
        for (auto asc : ascents(words[k])) h.up[k].push_back(h.index.at(transpose_ascent(words[k], asc)));
        std::sort(h.up[k].begin(), h.up[k].end());
    }
    return h;
}

bool face_contains(const SFace& inner, const SFace& outer, const SComp& s) {
    return s_leq(outer.w, inner.w, s) &&
           s_leq(add_ascents(inner.w, inner.A, s), add_ascents(outer.w, outer.A, s), s);
}

std::vector<SFace> all_faces(const SComp& s, int cap) {
    std::vector<SFace> out;
    for (const auto& w : s_hasse(s, cap).elems) {
        auto asc = ascents(w);
        for (std::uint32_t mask = 0; mask < (1u << asc.size()); ++mask) {
            SFace f{w, {}};
            for (size_t k = 0; k < asc.size(); ++k)
                if (mask >> k & 1) f.A.push_back(asc[k]);
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace ptl
