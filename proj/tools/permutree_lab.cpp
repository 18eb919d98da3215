// Command-line front end: permutree-lab <group> <action> [flags]
#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "ptl/automata.hpp"
#include "ptl/bicho.hpp"
#include "ptl/flows.hpp"
#include "ptl/oruga.hpp"
#include "ptl/permutree.hpp"
#include "ptl/s_weak_order.hpp"
#include "ptl/serialize.hpp"
#include "ptl/vectors.hpp"
#include "ptl/weak_order.hpp"

using namespace ptl;

namespace {

struct Args {
    int n = 0;
    std::string delta, s, U, D, pi, epsilon, target;
    bool json = false;
    int approx = -1;
    int cap = -1;
    std::string action;
};

int emit(const Args& a, const Json& j, const std::string& text) {
    if (a.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return 0;
}

Decoration need_delta(const Args& a) {
    if (a.delta.empty()) {
        if (a.n <= 0) throw ValidationError("--delta (or --n for none^n) is required");
        return Decoration::uniform(a.n, Sym::none);
    }
    auto d = Decoration::parse(a.delta);
    if (a.n > 0 && a.n != d.n()) throw ValidationError("--n does not match the length of --delta");
    if (d.normalized_warning) std::cerr << "note: end symbols normalized to none: " << d.to_string() << "\n";
    return d;
}

SComp need_s(const Args& a) {
    if (a.s.empty()) throw ValidationError("--s is required");
    return parse_composition(a.s);
}

Perm need_pi(const Args& a) {
    if (a.pi.empty()) throw ValidationError("--pi is required");
    return parse_perm(a.pi);
}

int cap_for(const Args& a, int fallback) { return a.cap > 0 ? a.cap : size_cap(fallback); }

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
    return out;
}

// ---- permutree ----

int permutree_cmd(const Args& a) {
    if (a.action == "count") {
        auto d = need_delta(a);
        check_cap(d.n(), cap_for(a, 20), "count_permutrees n");
        auto c = count_permutrees(d);
        return emit(a, Json{{"delta", d.to_string()}, {"count", c}}, "count(" + d.to_string() + ") = " + std::to_string(c) + "\n");
    }
    if (a.action == "lattice") {
        auto d = need_delta(a);
        auto lat = rotation_lattice(d, a.cap);
        std::ostringstream os;
        os << "rotation lattice of " << d.to_string() << ": " << lat.elems.size() << " permutrees\n";
        for (size_t k = 0; k < lat.elems.size(); ++k)
            os << k << "\tinv " << lat.keys[k].to_string() << "\tup " << join(lat.up[k]) << "\n";
        return emit(a, to_json(lat), os.str());
    }
    if (a.action == "insert") {
        auto p = need_pi(a);
        Args b = a;
        if (b.delta.empty()) b.n = static_cast<int>(p.size());
        auto d = need_delta(b);
        auto t = insert(p, d);
        std::ostringstream os;
        os << "P(" << format_perm(p) << ", " << d.to_string() << ")\n";
        for (auto [x, y] : t.edges()) os << x << " -> " << y << "\n";
        return emit(a, to_json(t), os.str());
    }
    if (a.action == "sort") {
        auto p = need_pi(a);
        auto U = parse_int_list(a.U), D = parse_int_list(a.D);
        auto o = permutree_sort(p, U, D);
        std::ostringstream os;
        for (const auto& st : o.trace)
            os << format_perm(st.perm) << "\tU={" << join(st.U) << "} D={" << join(st.D) << "}\ts" << st.letter << "\n";
        os << "sorted=" << (o.sorted ? "true" : "false") << " word=" << join(o.word, " ")
           << " residual=" << format_perm(o.residual) << "\n";
        return emit(a, to_json(o), os.str());
    }
    throw ValidationError("unknown permutree action " + a.action);
}

// ---- s-weak order ----

int sorder_cmd(const Args& a) {
    auto s = need_s(a);
    if (a.action == "count") {
        auto c = count_s_trees(s);
        return emit(a, Json{{"s", s}, {"count", c}}, "count = " + std::to_string(c) + "\n");
    }
    if (a.action == "hasse") {
        auto h = s_hasse(s, a.cap);
        std::ostringstream os;
        for (size_t k = 0; k < h.elems.size(); ++k) {
            std::vector<std::string> ups;
            os << format_sword(h.elems[k]) << " <";
            for (int u : h.up[k]) os << " " << format_sword(h.elems[u]);
            os << "\n";
        }
        return emit(a, to_json(h, s), os.str());
    }
    if (a.action == "realize") {
        auto r = a.epsilon.empty() ? realize(s, a.cap) : realize(s, parse_rational(a.epsilon), a.cap);
        std::optional<int> approx;
        if (a.approx >= 0) approx = a.approx;
        std::ostringstream os;
        os << "epsilon = " << r.eps.get_str() << ", " << r.vertices.size() << " vertices, " << r.edges.size()
           << " edges\n";
        for (const auto& [w, x] : r.vertices) {
            os << format_sword(w) << "\t";
            for (size_t k = 0; k < x.size(); ++k) os << (k ? " " : "") << (approx ? decimal(x[k], *approx) : x[k].get_str());
            os << "\n";
        }
        return emit(a, to_json(r, approx), os.str());
    }
    if (a.action == "identities") {
        auto r = lidskii_identities(s);
        std::ostringstream os;
        os << "product " << r.product.get_str() << "\nfirst   " << r.first.get_str() << "\nsecond  " << r.second.get_str()
           << " (" << r.negative_terms << " negative terms)\n"
           << (r.ok() ? "PASS" : "FAIL") << "\n";
        return emit(a, to_json(r, s), os.str());
    }
    throw ValidationError("unknown sorder action " + a.action);
}

// ---- flows ----

FramedGraph pick_graph(const Args& a, std::string& name) {
    if (!a.s.empty()) {
        name = "oru(" + a.s + ")";
        return build_oru(parse_composition(a.s)).g;
    }
    if (!a.delta.empty() || a.n > 0) {
        auto d = need_delta(a);
        name = "bic_" + d.to_string();
        return build_bic(d).g;
    }
    name = "example";
    return example_graph();
}

int flows_cmd(const Args& a) {
    std::string name;
    auto g = pick_graph(a, name);
    if (a.action == "routes") {
        auto rs = routes(g, a.cap);
        Json j = Json::array();
        std::ostringstream os;
        for (size_t k = 0; k < rs.size(); ++k) {
            j.push_back(rs[k]);
            os << k << "\t" << format_route(rs[k]) << "\n";
        }
        return emit(a, Json{{"graph", name}, {"routes", j}}, os.str());
    }
    if (a.action == "cliques") {
        auto rs = routes(g, a.cap);
        auto cl = max_cliques(g, rs, a.cap);
        Json j = Json::array();
        std::ostringstream os;
        os << cl.size() << " maximal cliques of " << rs.size() << " routes\n";
        for (const auto& c : cl) {
            j.push_back(c);
            os << "{" << join(c) << "}\n";
        }
        return emit(a, Json{{"graph", name}, {"routes", rs}, {"cliques", j}}, os.str());
    }
    if (a.action == "kostant") {
        auto d = shifted_indegrees(g);
        auto k = kostant(g, d);
        return emit(a, Json{{"graph", name}, {"netflow", d}, {"value", k}},
                    "K(" + join(std::vector<int>(d.begin(), d.end())) + ") = " + std::to_string(k) + "\n");
    }
    if (a.action == "volume") {
        auto v = lidskii_volume(g, unit_netflow(g));
        return emit(a, Json{{"graph", name}, {"volume", v.get_str()}}, "normalized volume = " + v.get_str() + "\n");
    }
    throw ValidationError("unknown flows action " + a.action);
}

// ---- bicho ----

int bicho_cmd(const Args& a) {
    if (a.action == "build") {
        auto b = build_bic(need_delta(a));
        std::ostringstream os;
        os << "bic_" << b.delta.to_string() << ": " << b.g.vertex_count << " vertices, " << b.g.edge_count() << " edges\n";
        for (const auto& e : b.g.edges) os << e.id << "\t(" << e.tail << "," << e.head << ")\n";
        return emit(a, to_json(b), os.str());
    }
    if (a.action == "verify") {
        auto d = need_delta(a);
        auto v = verify_bicho(d, a.cap);
        Json j{{"delta", d.to_string()},
               {"counts", {{"flows", v.flows}, {"permutrees", v.permutrees}, {"cliques", v.cliques}}},
               {"counts_equal", v.counts},
               {"clique_bijection", v.clique_bijection},
               {"lattice_isomorphism", v.lattice},
               {"ok", v.ok()}};
        if (v.round_trip) j["round_trip"] = *v.round_trip;
        std::ostringstream os;
        os << "flows " << v.flows << ", cliques " << v.cliques << ", permutrees " << v.permutrees << "\n"
           << "clique bijection " << (v.clique_bijection ? "PASS" : "FAIL") << "\n"
           << "lattice isomorphism " << (v.lattice ? "PASS" : "FAIL") << "\n";
        if (v.round_trip) os << "d-flow round trip " << (*v.round_trip ? "PASS" : "FAIL") << "\n";
        emit(a, j, os.str());
        return v.ok() ? 0 : 1;
    }
    if (a.action == "conjectures") {
        std::vector<Decoration> ds;
        if (a.delta.empty()) {
            if (a.n <= 0) throw ValidationError("--delta or --n is required");
            ds = all_decorations(a.n);
        } else {
            ds.push_back(need_delta(a));
        }
        Json j = Json::array();
        std::ostringstream os;
        for (const auto& d : ds) {
            auto r = check_conjectures(d, a.cap);
            j.push_back(to_json(r));
            os << d.to_string() << "\tflows " << r.flows << "\tconjecture 1 "
               << (r.conjecture_1 ? (*r.conjecture_1 ? "PASS" : "FAIL") : "n/a") << "\tconjecture 2 "
               << (r.conjecture_2 ? "PASS" : "FAIL") << "\n";
        }
        return emit(a, a.delta.empty() ? j : j[0], os.str());
    }
    throw ValidationError("unknown bicho action " + a.action);
}

// ---- verify ----

using Check = std::pair<std::string, bool>;

std::vector<Check> verify_module(const std::string& m) {
    std::vector<Check> out;
    if (m == "weak_order") {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (const auto& p : all_perms(n))
                for (const auto& q : all_perms(n)) {
                    auto [lo, hi] = lattice_meet_join(p, q);
                    ok = ok && weak_leq(lo, p) && weak_leq(lo, q) && weak_leq(p, hi) && weak_leq(q, hi);
                }
        out.push_back({"meet and join bound both arguments, n <= 4", ok});
    } else if (m == "permutree") {
        bool ok = true;
        for (const auto& d : all_decorations(4)) {
            std::set<std::vector<std::array<int, 2>>> fibers;
            for (const auto& p : all_perms(4)) fibers.insert(insert(p, d).child);
            ok = ok && fibers.size() == count_permutrees(d) && rotation_lattice(d).elems.size() == fibers.size();
        }
        out.push_back({"count = lattice size = insertion fibers, n = 4", ok});
    } else if (m == "vectors") {
        bool ok = true;
        for (int n = 1; n <= 5; ++n)
            for (const auto& d : all_decorations(n)) {
                std::set<std::vector<int>> seen;
                auto lat = rotation_lattice(d);
                for (const auto& t : lat.elems) {
                    seen.insert(cubic_vector(t));
                    ok = ok && inversion_set(permutree_from_inversion_set(inversion_set(t), d)) == inversion_set(t);
                }
                ok = ok && seen.size() == lat.elems.size();
            }
        out.push_back({"cubic vectors injective, inversion sets round trip, n <= 5", ok});
    } else if (m == "automata") {
        bool ok = true;
        for (int n = 3; n <= 5; ++n)
            for (int j = 2; j < n; ++j)
                for (const auto& p : all_perms(n)) {
                    ok = ok && exists_accepted_word(p, {j}, {}) == avoids_patterns(p, {j}, {});
                    ok = ok && exists_accepted_word(p, {}, {j}) == avoids_patterns(p, {}, {j});
                }
        out.push_back({"accepted word exists iff pattern avoided, single sets, n <= 5", ok});
    } else if (m == "s_weak_order") {
        bool ok = true;
        for (SComp s : {SComp{1, 2, 1}, SComp{1, 2, 2}, SComp{2, 1, 3}, SComp{1, 1, 1, 1}})
            ok = ok && s_hasse(s).elems.size() == count_s_trees(s) && all_stirling(s).size() == count_s_trees(s);
        out.push_back({"Hasse size = tree count = Stirling count", ok});
    } else if (m == "flows") {
        auto g = example_graph();
        out.push_back({"K(0,1,1,-2) = 2 on the example graph", kostant(g, shifted_indegrees(g)) == 2});
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            auto h = doubled_path(n);
            ok = ok && kostant(h, shifted_indegrees(h)) == kostant_enumerated(h, shifted_indegrees(h));
        }
        out.push_back({"Kostant DP = enumeration on doubled paths", ok});
    } else if (m == "oruga") {
        bool ok = true;
        for (SComp s : {SComp{1, 2, 1}, SComp{1, 2, 2}, SComp{2, 1, 2}}) {
            auto adj = hasse_from_adjacency(s);
            ok = ok && adj.cliques.size() == count_s_trees(s) && lidskii_identities(s).ok();
            ok = ok && realize(s).vertices.size() == count_s_trees(s);
        }
        out.push_back({"cliques = s-permutations, Lidskii identities, realization", ok});
    } else if (m == "bicho") {
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (const auto& d : all_decorations(n)) ok = ok && verify_bicho(d).ok();
        out.push_back({"flows = cliques = permutrees and lattice isomorphism, n <= 4", ok});
    } else {
        throw ValidationError("unknown module " + m);
    }
    return out;
}

int verify_cmd(const Args& a) {
    static const std::vector<std::string> modules{"weak_order", "permutree", "vectors", "automata",
                                                  "s_weak_order", "flows", "oruga", "bicho"};
    std::vector<std::string> which;
    if (a.target == "all")
        which = modules;
    else
        which.push_back(a.target);
    Json j = Json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& m : which)
        for (const auto& [name, ok] : verify_module(m)) {
            j.push_back({{"module", m}, {"check", name}, {"ok", ok}});
            os << (ok ? "PASS " : "FAIL ") << m << ": " << name << "\n";
            all = all && ok;
        }
    emit(a, j, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutree-lab: permutrees, s-weak order and flow polytope triangulations"};
    app.require_subcommand(1);
    Args a;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--n", a.n, "size");
        c->add_option("--delta", a.delta, "decoration as letters n/d/u/x");
        c->add_option("--s", a.s, "composition, comma separated");
        c->add_option("--U", a.U, "comma list");
        c->add_option("--D", a.D, "comma list");
        c->add_option("--pi", a.pi, "permutation in one-line notation");
        c->add_option("--epsilon", a.epsilon, "rational num/den");
        c->add_flag("--json", a.json, "JSON output");
        c->add_option("--approx", a.approx, "also print decimals with this many digits");
        c->add_option("--cap", a.cap, "size cap");
    };
    struct Group {
        const char* name;
        const char* help;
        std::vector<std::string> actions;
        int (*run)(const Args&);
    };
    std::vector<Group> groups{{"permutree", "decorated permutations and permutrees", {"count", "lattice", "insert", "sort"}, permutree_cmd},
                              {"sorder", "s-weak order and its tropical realization", {"count", "hasse", "realize", "identities"}, sorder_cmd},
                              {"flows", "framed graphs, routes, cliques and flow counts", {"routes", "cliques", "kostant", "volume"}, flows_cmd},
                              {"bicho", "permutree flow graphs", {"build", "verify", "conjectures"}, bicho_cmd}};
    std::vector<CLI::App*> subs;
    for (const auto& g : groups) {
        auto* c = app.add_subcommand(g.name, g.help);
        c->add_option("action", a.action)->required()->check(CLI::IsMember(g.actions));
        add_common(c);
        subs.push_back(c);
    }
    auto* ver = app.add_subcommand("verify", "self-consistency sweeps");
    ver->add_option("module", a.target)
        ->required()
        ->check(CLI::IsMember({"all", "weak_order", "permutree", "vectors", "automata", "s_weak_order", "flows",
                               "oruga", "bicho"}));
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    try {
        if (ver->parsed()) return verify_cmd(a);
        for (size_t k = 0; k < groups.size(); ++k)
            if (subs[k]->parsed()) return groups[k].run(a);
    } catch (const CapError& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
