#pragma once
// Brute-force reference implementations used only by the tests.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ptl/permutree.hpp"
#include "ptl/weak_order.hpp"

namespace oracle {

struct Poset {
    int size = 0;
    std::vector<std::vector<char>> leq;
};

// Reflexive-transitive closure of a cover relation given as upward adjacency.
inline Poset from_covers(const std::vector<std::vector<int>>& up) {
    Poset p;
    p.size = static_cast<int>(up.size());
    p.leq.assign(p.size, std::vector<char>(p.size, 0));
    for (int a = 0; a < p.size; ++a) {
        std::vector<int> stack{a};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (p.leq[a][x]) continue;
            p.leq[a][x] = 1;
            for (int y : up[x]) stack.push_back(y);
        }
    }
    return p;
}

inline std::optional<int> meet(const Poset& p, int a, int b) {
    std::vector<int> lower;
    for (int x = 0; x < p.size; ++x)
        if (p.leq[x][a] && p.leq[x][b]) lower.push_back(x);
    for (int x : lower) {
        bool top = true;
        for (int y : lower) top = top && p.leq[y][x];
        if (top) return x;
    }
    return std::nullopt;
}

inline std::optional<int> join(const Poset& p, int a, int b) {
    std::vector<int> upper;
    for (int x = 0; x < p.size; ++x)
        if (p.leq[a][x] && p.leq[b][x]) upper.push_back(x);
    for (int x : upper) {
        bool bottom = true;
        for (int y : upper) bottom = bottom && p.leq[x][y];
        if (bottom) return x;
    }
    return std::nullopt;
}

inline bool is_lattice(const Poset& p) {
    for (int a = 0; a < p.size; ++a)
        for (int b = a + 1; b < p.size; ++b)
            if (!meet(p, a, b) || !join(p, a, b)) return false;
    return true;
}

// Lattice test for large bounded posets: a finite bounded poset is a lattice
// iff any two elements covering a common element have a join (Bjorner,
// Edelman, Ziegler). Up-sets are kept as bitsets.
inline bool is_lattice_by_covers(const std::vector<std::vector<int>>& up) {
    int N = static_cast<int>(up.size());
    if (N == 0) return false;
    std::vector<int> indeg(N, 0), order;
    for (auto& ys : up)
        for (int y : ys) ++indeg[y];
    for (int x = 0; x < N; ++x)
        if (!indeg[x]) order.push_back(x);
    if (order.size() != 1) return false;  // unique minimum
    for (size_t k = 0; k < order.size(); ++k)
        for (int y : up[order[k]])
            if (--indeg[y] == 0) order.push_back(y);
    if (static_cast<int>(order.size()) != N) return false;
    int tops = 0;
    for (auto& ys : up) tops += ys.empty();
    if (tops != 1) return false;
    std::vector<int> rank(N);
    for (int k = 0; k < N; ++k) rank[order[k]] = k;
    size_t words = (N + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<size_t>(N) * words, 0);
    auto row = [&](int x) { return bits.data() + static_cast<size_t>(x) * words; };
    for (int k = N - 1; k >= 0; --k) {
        int x = order[k];
        auto* r = row(x);
        r[x / 64] |= 1ull << (x % 64);
        for (int y : up[x]) {
            auto* q = row(y);
            for (size_t w = 0; w < words; ++w) r[w] |= q[w];
        }
    }
    std::vector<std::uint64_t> common(words);
    for (int x = 0; x < N; ++x)
        for (size_t i = 0; i < up[x].size(); ++i)
            for (size_t j = i + 1; j < up[x].size(); ++j) {
                auto *a = row(up[x][i]), *b = row(up[x][j]);
                int best = -1;
                for (size_t w = 0; w < words; ++w) {
                    common[w] = a[w] & b[w];
                    for (std::uint64_t v = common[w]; v; v &= v - 1) {
                        int e = static_cast<int>(w * 64 + __builtin_ctzll(v));
                        if (best < 0 || rank[e] < rank[best]) best = e;
                    }
                }
                if (best < 0) return false;
                auto* r = row(best);
                for (size_t w = 0; w < words; ++w)
                    if (r[w] != common[w]) return false;
            }
    return true;
}

// Covers of the weak order on S_n by position swaps, indexed through all_perms order.
struct WeakOrder {
    std::vector<ptl::Perm> perms;
    std::map<ptl::Perm, int> index;
    std::vector<std::vector<int>> up;
};

inline WeakOrder weak_order(int n) {
    WeakOrder w;
    w.perms = ptl::all_perms(n);
    for (int k = 0; k < static_cast<int>(w.perms.size()); ++k) w.index[w.perms[k]] = k;
    w.up.resize(w.perms.size());
    for (int k = 0; k < static_cast<int>(w.perms.size()); ++k) {
        const auto& p = w.perms[k];
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < p[i + 1]) {
                auto q = p;
                std::swap(q[i], q[i + 1]);
                w.up[k].push_back(w.index[q]);
            }
    }
    return w;
}

// Pattern containment by scanning every triple of positions.
inline bool contains_jki(const ptl::Perm& p, int j) {
    int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (p[a] == j && p[b] > j && p[c] < j) return true;
    return false;
}

inline bool contains_kij(const ptl::Perm& p, int j) {
    int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (p[a] > j && p[b] < j && p[c] == j) return true;
    return false;
}

// Minimality of a permutation for the congruence given by (U, D).
inline bool is_minimal(const ptl::Perm& p, const std::vector<int>& U, const std::vector<int>& D) {
    for (int j : U)
        if (contains_jki(p, j)) return false;
    for (int j : D)
        if (contains_kij(p, j)) return false;
    return true;
}

// Fibers of insertion, keyed by the tree's edge list.
inline std::map<std::vector<ptl::Pair>, std::vector<ptl::Perm>> fibers(const ptl::Decoration& d) {
    std::map<std::vector<ptl::Pair>, std::vector<ptl::Perm>> out;
    for (const auto& p : ptl::all_perms(d.n())) {
        auto e = ptl::insert(p, d).edges();
        std::sort(e.begin(), e.end());
        out[e].push_back(p);
    }
    return out;
}

// Compositions (strict, or weak with at least one positive part at the end)
// with n <= max_len parts and total at most `limit`.
inline std::vector<std::vector<int>> compositions(int limit, bool strict, int max_len = 100) {
    std::vector<std::vector<int>> out;
    std::vector<int> s;
    std::function<void(int)> rec = [&](int left) {
        if (!s.empty() && s.back() > 0) out.push_back(s);
        if (static_cast<int>(s.size()) == max_len) return;
        for (int x = strict ? 1 : 0; x <= left; ++x) {
            s.push_back(x);
            rec(left - x);
            s.pop_back();
        }
    };
    rec(limit);
    return out;
}

}  // namespace oracle
