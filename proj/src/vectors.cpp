#include "ptl/vectors.hpp"

namespace ptl {

PairSet inversion_set(const Permutree& t) {
    int n = t.n();
    auto d = descendants(t);
    PairSet b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (d[i][j]) b.add(i, j);
    return b;
}

std::vector<int> inversion_vector(const Permutree& t) {
    auto b = inversion_set(t);
    int n = t.n();
    std::vector<int> v(std::max(n - 1, 0), 0);
    for (auto [i, j] : b.pairs()) ++v[i - 1];
    return v;
}

std::string ConditionViolation::to_string() const {
    return condition + " fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
}

std::optional<ConditionViolation> check_inversion_set(const PairSet& e, const Decoration& delta) {
    int n = delta.n();
    if (e.n() != n) return ConditionViolation{"size mismatch", 0, 0, 0};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                bool ij = e.has(i, j), jk = e.has(j, k), ik = e.has(i, k);
                if (ij && jk && !ik) return ConditionViolation{"transitivity", i, j, k};
                if (ik && !ij && !jk) return ConditionViolation{"cotransitivity", i, j, k};
                Sym s = delta.at(j);
                if (has_down(s) && !ij && jk && ik) return ConditionViolation{"down condition", i, j, k};
                if (has_up(s) && ij && !jk && ik) return ConditionViolation{"up condition", i, j, k};
            }
    return std::nullopt;
}

Permutree permutree_from_inversion_set(const PairSet& e, const Decoration& delta) {
    if (auto bad = check_inversion_set(e, delta))
        throw ValidationError("not a permutree inversion set: " + bad->to_string());
    // A valid set is the inversion set of the minimum of its class.
    Permutree t = insert(perm_from_inversions(e), delta);
    if (inversion_set(t) != e) throw ValidationError("reconstruction mismatch for " + e.to_string());
    return t;
}

PairSet meet_inversion_set(const PairSet& a, const PairSet& b) {
    // One pass of the filter can leave a non-cotransitive set, since dropping
    // (i,j) may invalidate a longer pair that relied on it; repeat until stable.
    PairSet k = a.intersect(b);
    while (true) {
        PairSet m(k.n());
        for (auto [i, j] : k.pairs()) {
            bool ok = true;
            for (int l = i + 1; l < j && ok; ++l) ok = k.has(i, l) || k.has(l, j);
            if (ok) m.add(i, j);
        }
        if (m == k) return k;
        k = std::move(m);
    }
}

Permutree meet_via_inversions(const Permutree& a, const Permutree& b) {
    if (!(a.delta == b.delta)) throw ValidationError("meet needs a common decoration");
    return permutree_from_inversion_set(meet_inversion_set(inversion_set(a), inversion_set(b)),
                                        a.delta);
}

PairSet cubic_set(const Permutree& t) {
    int n = t.n();
    PairSet c(n);
    for (int i = 1; i <= n; ++i) {
        bool down = has_down(t.delta.at(i));
        std::uint32_t comp = component_through(t, i, down ? t.child[i][1] : t.child[i][0]);
        for (int j = i + 1; j <= n; ++j)
            if (comp >> (j - 1) & 1) c.add(i, j);
    }
    return c;
}

std::vector<int> cubic_vector(const Permutree& t) {
    int n = t.n();
    std::vector<int> v(std::max(n - 1, 0), 0);
    for (auto [i, j] : cubic_set(t).pairs())
        if (i < n) ++v[i - 1];
    return v;
}

Permutree extremal_permutree(const Decoration& delta, const std::vector<int>& corner) {
    int n = delta.n();
    if (static_cast<int>(corner.size()) != n - 1) throw ValidationError("corner must have n-1 entries");
    Perm p(n, 0);
    int low = 0, high = 0;
    for (int i = 1; i < n; ++i) {
        int r = corner[i - 1];
        if (r == 0 && n - i != 0) {
            p[low++] = i;
        } else if (r == n - i) {
            p[n - 1 - high++] = i;
        } else {
            throw ValidationError("corner entry " + std::to_string(i) + " must be 0 or n-i");
        }
    }
    p[low] = n;
    return insert(p, delta);
}

std::vector<CubicalPoint> cubical_embedding(const Decoration& delta, int cap) {
    auto lat = rotation_lattice(delta, cap);
    std::vector<CubicalPoint> out;
    for (auto& t : lat.elems) out.push_back({t, cubic_vector(t)});
    return out;
}

}  // namespace ptl
