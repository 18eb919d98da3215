#include "ptl/automata.hpp"

#include <algorithm>
#include <set>

namespace ptl {

std::string class_name(StateClass c) {
    switch (c) {
        case StateClass::healthy: return "healthy";
        case StateClass::ill: return "ill";
        case StateClass::dead: return "dead";
    }
    return "?";
}

int Automaton::run(const Word& w) const {
    int q = initial;
    for (int l : w) {
        if (l < 1 || l >= n) throw ValidationError("letter out of range: " + std::to_string(l));
        q = step(q, l);
    }
    return q;
}

std::string Automaton::edge_list() const {
    std::string out;
    for (int q = 0; q < size(); ++q)
        for (int l = 1; l < n; ++l)
            if (next[q][l - 1] != q)
                out += label[q] + " -s" + std::to_string(l) + "-> " + label[next[q][l - 1]] + "\n";
    return out;
}

Automaton build_single(Side kind, int j, int n) {
    if (j < 2 || j > n - 1) throw ValidationError("automaton index j must lie in [2,n-1]");
    Automaton a;
    a.n = n;
    // Spine positions: j..n for U, j..1 for D.
    std::vector<int> spine;
    if (kind == Side::U)
        for (int m = j; m <= n; ++m) spine.push_back(m);
    else
        for (int m = j; m >= 1; --m) spine.push_back(m);
    int k = static_cast<int>(spine.size());
    auto H = [&](int m) { return kind == Side::U ? m - j : j - m; };
    auto I = [&](int m) { return k + H(m); };
    int dead = 2 * k;
    a.cls.assign(2 * k + 1, StateClass::healthy);
    a.label.resize(2 * k + 1);
    a.next.assign(2 * k + 1, std::vector<int>(std::max(n - 1, 0)));
    for (int q = 0; q <= dead; ++q)
        for (int l = 1; l < n; ++l) a.next[q][l - 1] = q;
    std::string tag = kind == Side::U ? "U" : "D";
    for (int m : spine) {
        a.label[H(m)] = tag + "H" + std::to_string(m);
        a.label[I(m)] = tag + "I" + std::to_string(m);
        a.cls[I(m)] = StateClass::ill;
        if (kind == Side::U) {
            if (m <= n - 1) a.next[H(m)][m - 1] = H(m + 1);
            a.next[H(m)][m - 2] = I(m);
            if (m <= n - 1) a.next[I(m)][m - 1] = dead;
        } else {
            if (m >= 2) a.next[H(m)][m - 2] = H(m - 1);
            a.next[H(m)][m - 1] = I(m);
            if (m >= 2) a.next[I(m)][m - 2] = dead;
        }
    }
    a.label[dead] = tag + "dead";
    a.cls[dead] = StateClass::dead;
    a.initial = H(j);
    return a;
}

void require_disjoint(const std::vector<int>& U, const std::vector<int>& D, int n) {
    for (int u : U)
        if (u < 2 || u > n - 1) throw ValidationError("U entries must lie in [2,n-1]");
    for (int d : D)
        if (d < 2 || d > n - 1) throw ValidationError("D entries must lie in [2,n-1]");
    for (int u : U)
        if (std::find(D.begin(), D.end(), u) != D.end())
            throw ValidationError("U and D must be disjoint (both contain " + std::to_string(u) + ")");
}

Automaton product(const std::vector<int>& U, const std::vector<int>& D, int n) {
    std::vector<Automaton> f;
    std::vector<int> su = U, sd = D;
    std::sort(su.begin(), su.end());
    std::sort(sd.begin(), sd.end());
    for (int u : su) f.push_back(build_single(Side::U, u, n));
    for (int d : sd) f.push_back(build_single(Side::D, d, n));

    Automaton a;
    a.n = n;
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> tuples;
    int dead = -1;
    auto intern = [&](const std::vector<int>& t) {
        bool any_dead = false, any_ill = false;
        for (size_t k = 0; k < f.size(); ++k) {
            any_dead = any_dead || f[k].cls[t[k]] == StateClass::dead;
            any_ill = any_ill || f[k].cls[t[k]] == StateClass::ill;
        }
        if (any_dead) {
            if (dead < 0) {
                dead = a.size();
                a.cls.push_back(StateClass::dead);
                a.label.push_back("dead");
                a.next.emplace_back();
                tuples.emplace_back();
            }
            return dead;
        }
        auto it = id.find(t);
        if (it != id.end()) return it->second;
        int q = a.size();
        id.emplace(t, q);
        a.cls.push_back(any_ill ? StateClass::ill : StateClass::healthy);
        std::string lab = "(";
        for (size_t k = 0; k < f.size(); ++k) lab += (k ? "," : "") + f[k].label[t[k]];
        a.label.push_back(lab + ")");
        a.next.emplace_back();
        tuples.push_back(t);
        return q;
    };
    std::vector<int> init;
    for (auto& x : f) init.push_back(x.initial);
    a.initial = intern(init);
    for (int q = 0; q < a.size(); ++q) {
        std::vector<int> row(std::max(n - 1, 0));
        for (int l = 1; l < n; ++l) {
            if (q == dead) {
                row[l - 1] = q;
                continue;
            }
            std::vector<int> t = tuples[q];
            for (size_t k = 0; k < f.size(); ++k) t[k] = f[k].step(t[k], l);
            row[l - 1] = intern(t);
        }
        a.next[q] = std::move(row);
    }
    return a;
}

bool avoids_patterns(const Perm& p, const std::vector<int>& U, const std::vector<int>& D) {
    for (int u : U)
        if (!avoids_fixed_pattern(p, u, PatternKind::jki)) return false;
    for (int d : D)
        if (!avoids_fixed_pattern(p, d, PatternKind::kij)) return false;
    return true;
}

bool exists_accepted_word(const Perm& p, const std::vector<int>& U, const std::vector<int>& D) {
    require_permutation(p);
    int n = static_cast<int>(p.size());
    require_disjoint(U, D, n);
    bool scan = avoids_patterns(p, U, D);
    bool search = search_accepted_word(p, product(U, D, n));
    if (scan != search) throw std::logic_error("pattern scan and word search disagree on " + format_perm(p));
    return scan;
}

std::map<Perm, std::vector<int>> accepted_states(const Automaton& a) {
    int n = a.n;
    auto perms = all_perms(n);
    std::stable_sort(perms.begin(), perms.end(),
                     [](const Perm& x, const Perm& y) { return length(x) < length(y); });
    std::map<Perm, std::vector<int>> states;
    for (const auto& p : perms) {
        std::set<int> s;
        if (length(p) == 0) {
            if (a.cls[a.initial] != StateClass::dead) s.insert(a.initial);
        } else {
            for (int i = 1; i < n; ++i) {
                if (p[i - 1] < p[i]) continue;
                for (int q : states[swap_positions(p, i)]) {
                    int r = a.step(q, i);
                    if (a.cls[r] != StateClass::dead) s.insert(r);
                }
            }
        }
        states[p] = std::vector<int>(s.begin(), s.end());
    }
    return states;
}

bool search_accepted_word(const Perm& p, const Automaton& a) {
    // Peel letters off the front: the first letter l of a reduced word has
    // l+1 before l, and removing it swaps those two values.
    std::set<std::pair<Perm, int>> seen;
    std::vector<std::pair<Perm, int>> stack{{p, a.initial}};
    if (a.cls[a.initial] == StateClass::dead) return false;
    while (!stack.empty()) {
        auto [r, q] = stack.back();
        stack.pop_back();
        if (!seen.insert({r, q}).second) continue;
        if (length(r) == 0) return true;
        auto pos = inverse(r);
        for (int l = 1; l < a.n; ++l) {
            if (pos[l] > pos[l - 1]) continue;
            int nq = a.step(q, l);
            if (a.cls[nq] == StateClass::dead) continue;
            stack.push_back({swap_values(r, l), nq});
        }
    }
    return false;
}

namespace {

std::vector<int> letter_order(int n, const Priority& prio) {
    std::vector<int> letters;
    for (int l = 1; l < n; ++l) letters.push_back(l);
    if (!prio.empty()) {
        if (static_cast<int>(prio.size()) != n - 1) throw ValidationError("priority must rank n-1 letters");
        std::stable_sort(letters.begin(), letters.end(),
                         [&](int x, int y) { return prio[x - 1] < prio[y - 1]; });
    }
    return letters;
}

bool left_descent(const Perm& r, int l) {
    auto pos = inverse(r);
    return pos[l] < pos[l - 1];
}

// Values 1..k sit in the first k positions.
bool prefix_fixed(const Perm& r, int k) {
    for (int i = 0; i < k; ++i)
        if (r[i] > k) return false;
    return true;
}

}  // namespace

SortOutcome algorithm1(const Perm& p, Side kind, int j, const Priority& prio) {
    require_permutation(p);
    int n = static_cast<int>(p.size());
    if (j < 2 || j > n - 1) throw ValidationError("automaton index j must lie in [2,n-1]");
    auto letters = letter_order(n, prio);
    SortOutcome out;
    Perm r = p;
    int J = j;
    auto apply = [&](int l) {
        SortStep st{r, {}, {}, l};
        (kind == Side::U ? st.U : st.D).push_back(J);
        out.trace.push_back(std::move(st));
        r = swap_values(r, l);
        out.word.push_back(l);
    };
    // Healthy phase: follow the spine, avoiding the letter that makes the automaton ill.
    int forbidden = kind == Side::U ? J - 1 : J;
    while (true) {
        int chosen = 0;
        for (int l : letters)
            if (l != forbidden && left_descent(r, l)) {
                chosen = l;
                break;
            }
        if (!chosen) break;
        apply(chosen);
        if (kind == Side::U && chosen == J) ++J;
        if (kind == Side::D && chosen == J - 1) --J;
        forbidden = kind == Side::U ? J - 1 : J;
    }
    // Ill transition, then sort both blocks without the killing letter.
    int ill = kind == Side::U ? J - 1 : J;
    int kill = 0;
    if (ill >= 1 && ill < n && left_descent(r, ill)) {
        apply(ill);
        kill = kind == Side::U ? J : J - 1;
    }
    while (true) {
        int chosen = 0;
        for (int l : letters)
            if (l != kill && left_descent(r, l)) {
                chosen = l;
                break;
            }
        if (!chosen) break;
        apply(chosen);
    }
    out.residual = r;
    out.sorted = length(r) == 0;
    return out;
}

SortOutcome algorithm2(const Perm& p, const std::vector<int>& U, const std::vector<int>& D,
                       const Priority& prio) {
    require_permutation(p);
    int n = static_cast<int>(p.size());
    require_disjoint(U, D, n);
    auto letters = letter_order(n, prio);
    std::vector<int> u = U, d = D;  // healthy factors, by spine position
    std::vector<int> kills;          // letters that would kill an ill factor
    SortOutcome out;
    Perm r = p;
    auto has = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    auto apply = [&](int l) {
        out.trace.push_back({r, u, d, l});
        r = swap_values(r, l);
        out.word.push_back(l);
        for (int& x : u)
            if (x == l) x = l + 1;
        for (int& x : d)
            if (x == l + 1) x = l;
    };
    while (true) {
        int chosen = 0;
        for (int l : letters)
            if (left_descent(r, l) && !has(u, l + 1) && !has(d, l) && !has(kills, l)) {
                chosen = l;
                break;
            }
        if (chosen) {
            apply(chosen);
            continue;
        }
        for (int l : letters) {
            if (!left_descent(r, l) || has(kills, l)) continue;
            bool goes_u = has(u, l + 1), goes_d = has(d, l);
            if (!goes_u && !goes_d) continue;
            if (goes_u && !prefix_fixed(r, l + 1)) continue;
            if (goes_d && !prefix_fixed(r, l - 1)) continue;
            chosen = l;
            break;
        }
        if (!chosen) break;
        int l = chosen;
        if (has(u, l + 1)) {
            u.erase(std::remove(u.begin(), u.end(), l + 1), u.end());
            kills.push_back(l + 1);
        }
        if (has(d, l)) {
            d.erase(std::remove(d.begin(), d.end(), l), d.end());
            kills.push_back(l - 1);
        }
        apply(l);
    }
    out.residual = r;
    out.sorted = length(r) == 0;
    return out;
}

SortOutcome permutree_sort(const Perm& p, const std::vector<int>& U, const std::vector<int>& D,
                           const Priority& prio) {
    require_disjoint(U, D, static_cast<int>(p.size()));
    if (U.size() == 1 && D.empty()) return algorithm1(p, Side::U, U[0], prio);
    if (D.size() == 1 && U.empty()) return algorithm1(p, Side::D, D[0], prio);
    return algorithm2(p, U, D, prio);
}

GeneratingTree generating_tree(int n, const std::vector<int>& U, const std::vector<int>& D,
                               const Priority& prio) {
    require_disjoint(U, D, n);
    auto a = product(U, D, n);
    auto letters = letter_order(n, prio);
    std::vector<int> rank(n, 0);
    for (size_t k = 0; k < letters.size(); ++k) rank[letters[k]] = static_cast<int>(k);
    auto less = [&](const Word& x, const Word& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [&](int s, int t) { return rank[s] < rank[t]; });
    };
    auto perms = all_perms(n);
    std::stable_sort(perms.begin(), perms.end(),
                     [](const Perm& x, const Perm& y) { return length(x) < length(y); });
    GeneratingTree g;
    std::map<Perm, int> node;
    std::vector<int> state;
    for (const auto& p : perms) {
        int best = -1, best_state = -1;
        Word best_word;
        if (length(p) == 0) {
            best_word = {};
            best_state = a.initial;
        } else {
            for (int i = 1; i < n; ++i) {
                if (p[i - 1] < p[i]) continue;
                auto it = node.find(swap_positions(p, i));
                if (it == node.end()) continue;
                int q = a.step(state[it->second], i);
                if (a.cls[q] == StateClass::dead) continue;
                Word w = g.words[it->second];
                w.push_back(i);
                if (best < 0 || less(w, best_word)) {
                    best = it->second;
                    best_word = std::move(w);
                    best_state = q;
                }
            }
            if (best < 0) continue;
        }
        node[p] = static_cast<int>(g.words.size());
        g.words.push_back(std::move(best_word));
        g.perms.push_back(p);
        g.parent.push_back(best);
        state.push_back(best_state);
    }
    return g;
}

void require_coxeter_element(const Word& c, int n) {
    std::vector<int> seen(n, 0);
    if (static_cast<int>(c.size()) != n - 1) throw ValidationError("Coxeter element needs each of s_1..s_{n-1} once");
    for (int l : c) {
        if (l < 1 || l >= n || seen[l]++) throw ValidationError("Coxeter element needs each of s_1..s_{n-1} once");
    }
}

CoxeterSort coxeter_sort(const Perm& p, const Word& c) {
    require_permutation(p);
    int n = static_cast<int>(p.size());
    require_coxeter_element(c, n);
    CoxeterSort out;
    Perm r = p;
    while (length(r) > 0) {
        std::vector<int> factor;
        for (int l : c)
            if (left_descent(r, l)) {
                r = swap_values(r, l);
                out.word.push_back(l);
                factor.push_back(l);
            }
        out.factors.push_back(std::move(factor));
    }
    out.sortable = true;
    for (size_t k = 1; k < out.factors.size(); ++k)
        for (int l : out.factors[k])
            if (std::find(out.factors[k - 1].begin(), out.factors[k - 1].end(), l) == out.factors[k - 1].end())
                out.sortable = false;
    return out;
}

std::pair<std::vector<int>, std::vector<int>> coxeter_sets(const Word& c, int n) {
    require_coxeter_element(c, n);
    std::vector<int> pos(n + 1, 0);
    for (size_t k = 0; k < c.size(); ++k) pos[c[k]] = static_cast<int>(k);
    std::vector<int> U, D;
    for (int j = 2; j <= n - 1; ++j) (pos[j] < pos[j - 1] ? U : D).push_back(j);
    return {U, D};
}

}  // namespace ptl
