#include "ptl/weak_order.hpp"

#include <algorithm>
#include <numeric>

namespace ptl {

int PairSet::size() const {
    int c = 0;
    for (char b : bits_) c += b;
    return c;
}

std::vector<Pair> PairSet::pairs() const {
    std::vector<Pair> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has(i, j)) out.emplace_back(i, j);
    return out;
}

bool PairSet::subset_of(const PairSet& o) const {
    for (size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k] && !o.bits_[k]) return false;
    return true;
}

PairSet PairSet::intersect(const PairSet& o) const {
    PairSet r(n_);
    for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = bits_[k] && o.bits_[k];
    return r;
}

PairSet PairSet::unite(const PairSet& o) const {
    PairSet r(n_);
    for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = bits_[k] || o.bits_[k];
    return r;
}

PairSet PairSet::complement() const {
    PairSet r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!has(i, j)) r.add(i, j);
    return r;
}

std::string PairSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : pairs()) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return s + "}";
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size() + 1, 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void require_permutation(const Perm& p) {
    if (!is_permutation(p)) throw ValidationError("not a permutation: " + format_perm(p));
}

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm longest_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = n - i;
    return p;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

Perm parse_perm(const std::string& text) {
    Perm p;
    if (text.find(',') != std::string::npos) {
        p = parse_int_list(text);
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw ValidationError("bad permutation digit in '" + text + "'");
            p.push_back(c - '0');
        }
    }
    require_permutation(p);
    return p;
}

std::string format_perm(const Perm& p) {
    if (p.size() <= 9) {
        std::string s;
        for (int v : p) s += (v >= 1 && v <= 9) ? static_cast<char>('0' + v) : '?';
        return s;
    }
    return format_word(p);
}

PairSet inversions(const Perm& p) {
    int n = static_cast<int>(p.size());
    PairSet e(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p[a] > p[b]) e.add(p[b], p[a]);
    return e;
}

int length(const Perm& p) {
    int c = 0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b) c += p[a] > p[b];
    return c;
}

std::vector<int> lehmer_code(const Perm& p) {
    int n = static_cast<int>(p.size());
    auto pos = inverse(p);
    std::vector<int> code(std::max(n - 1, 0), 0);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pos[j - 1] < pos[i - 1]) ++code[i - 1];
    return code;
}

Perm from_lehmer(const std::vector<int>& code) {
    int n = static_cast<int>(code.size()) + 1;
    // Place values n..1: value i goes after exactly code[i] of the larger values.
    Perm p{n};
    for (int i = n - 1; i >= 1; --i) {
        int a = code[i - 1];
        if (a < 0 || a > n - i) throw ValidationError("Lehmer entry out of range");
        p.insert(p.begin() + a, i);
    }
    return p;
}

bool is_transitive(const PairSet& e) {
    int n = e.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (e.has(i, j))
                for (int k = j + 1; k <= n; ++k)
                    if (e.has(j, k) && !e.has(i, k)) return false;
    return true;
}

bool is_cotransitive(const PairSet& e) {
    int n = e.n();
    for (int i = 1; i <= n; ++i)
        for (int k = i + 2; k <= n; ++k)
            if (e.has(i, k))
                for (int j = i + 1; j < k; ++j)
                    if (!e.has(i, j) && !e.has(j, k)) return false;
    return true;
}

PairSet transitive_closure(const PairSet& e) {
    PairSet c = e;
    int n = e.n();
    // Pairs grouped by span: (i,k) only depends on shorter spans.
    for (int span = 2; span < n; ++span)
        for (int i = 1; i + span <= n; ++i) {
            int k = i + span;
            if (c.has(i, k)) continue;
            for (int j = i + 1; j < k; ++j)
                if (c.has(i, j) && c.has(j, k)) {
                    c.add(i, k);
                    break;
                }
        }
    return c;
}

Perm perm_from_inversions(const PairSet& e) {
    int n = e.n();
    Perm p(n, 0);
    for (int v = 1; v <= n; ++v) {
        int before = 0;
        for (int u = 1; u < v; ++u) before += !e.has(u, v);
        for (int u = v + 1; u <= n; ++u) before += e.has(v, u);
        if (p[before] != 0) throw ValidationError("not an inversion set: " + e.to_string());
        p[before] = v;
    }
    if (inversions(p) != e) throw ValidationError("not an inversion set: " + e.to_string());
    return p;
}

bool weak_leq(const Perm& a, const Perm& b) { return inversions(a).subset_of(inversions(b)); }

std::pair<Perm, Perm> lattice_meet_join(const Perm& a, const Perm& b) {
    auto ia = inversions(a), ib = inversions(b);
    Perm join = perm_from_inversions(transitive_closure(ia.unite(ib)));
    auto keep = transitive_closure(ia.complement().unite(ib.complement()));
    Perm meet = perm_from_inversions(keep.complement());
    return {meet, join};
}

Perm swap_values(const Perm& p, int l) {
    Perm q = p;
    for (int& v : q) {
        if (v == l) v = l + 1;
        else if (v == l + 1) v = l;
    }
    return q;
}

Perm swap_positions(const Perm& p, int i) {
    Perm q = p;
    std::swap(q[i - 1], q[i]);
    return q;
}

Perm evaluate_word(const Word& w, int n) {
    Perm p = identity_perm(n);
    for (int l : w) {
        if (l < 1 || l >= n) throw ValidationError("letter out of range: " + std::to_string(l));
        p = swap_positions(p, l);
    }
    return p;
}

bool is_reduced_word_of(const Word& w, const Perm& p) {
    return static_cast<int>(w.size()) == length(p) &&
           evaluate_word(w, static_cast<int>(p.size())) == p;
}

namespace {
void words_rec(const Perm& p, Word& suffix, std::vector<Word>& out) {
    bool any = false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] > p[i + 1]) {
            any = true;
            suffix.push_back(static_cast<int>(i) + 1);
            words_rec(swap_positions(p, static_cast<int>(i) + 1), suffix, out);
            suffix.pop_back();
        }
    }
    if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}
}  // namespace

std::vector<Word> reduced_words(const Perm& p, int cap) {
    require_permutation(p);
    check_cap(static_cast<int>(p.size()), cap > 0 ? cap : size_cap(8), "reduced_words n");
    std::vector<Word> out;
    Word suffix;
    words_rec(p, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool avoids_fixed_pattern(const Perm& p, int j, PatternKind kind) {
    int n = static_cast<int>(p.size());
    if (j < 2 || j > n - 1) throw ValidationError("pattern index j must lie in [2,n-1]");
    auto pos = inverse(p);
    int pj = pos[j - 1];
    if (kind == PatternKind::jki) {
        // j, then some k>j, then some i<j.
        int first_big = n;
        for (int a = pj + 1; a <= n; ++a)
            if (p[a - 1] > j) { first_big = a; break; }
        for (int a = first_big + 1; a <= n; ++a)
            if (p[a - 1] < j) return false;
        return true;
    }
    // k, then i, then j.
    int first_big = n + 1;
    for (int a = 1; a < pj; ++a)
        if (p[a - 1] > j) { first_big = a; break; }
    for (int a = first_big + 1; a < pj; ++a)
        if (p[a - 1] < j) return false;
    return true;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Perm> up_covers(const Perm& p) {
    std::vector<Perm> out;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) out.push_back(swap_positions(p, static_cast<int>(i) + 1));
    return out;
}

}  // namespace ptl
