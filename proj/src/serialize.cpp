#include "ptl/serialize.hpp"

#include <climits>

#include "ptl/vectors.hpp"

namespace ptl {

static Json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

Json to_json(const mpq_class& q) { return Json{{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}}; }

std::string decimal(const mpq_class& q, int digits) {
    if (digits < 0 || digits > 1000) throw ValidationError("--approx needs 0..1000 digits");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class scaled = abs(q) * scale;
    // round half up on the absolute value
    mpz_class r = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
    std::string s = r.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (q < 0 && r != 0) s.insert(0, "-");
    return s;
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw ValidationError("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

Json to_json(const Permutree& t) {
    Json children = Json::array(), parents = Json::array();
    for (int i = 1; i <= t.n(); ++i) {
        Json c = Json::array(), p = Json::array();
        for (int k = 0; k < t.child_arity(i); ++k) c.push_back(t.child[i][k]);
        for (int k = 0; k < t.parent_arity(i); ++k) p.push_back(t.parent[i][k]);
        children.push_back(c);
        parents.push_back(p);
    }
    Json edges = Json::array();
    for (auto [x, y] : t.edges()) edges.push_back({x, y});
    return Json{{"n", t.n()}, {"delta", t.delta.to_string()}, {"children", children}, {"parents", parents},
                {"edges", edges}};
}

static Json pairs_json(const PairSet& p) {
    Json out = Json::array();
    for (auto [i, j] : p.pairs()) out.push_back({i, j});
    return out;
}

Json to_json(const RotationLattice& lat) {
    Json nodes = Json::array(), edges = Json::array();
    for (size_t k = 0; k < lat.elems.size(); ++k) {
        nodes.push_back({{"id", k}, {"inversions", pairs_json(lat.keys[k])}});
        for (int u : lat.up[k]) edges.push_back({k, u});
    }
    std::string delta = lat.elems.empty() ? "" : lat.elems[0].delta.to_string();
    return Json{{"delta", delta}, {"nodes", nodes}, {"edges", edges}};
}

Json to_json(const FramedGraph& g) {
    Json edges = Json::array(), framing = Json::object();
    for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    for (int v = 0; v < g.vertex_count; ++v)
        framing[std::to_string(v)] = {{"in", g.in_order[v]}, {"out", g.out_order[v]}};
    return Json{{"vertices", g.vertex_count}, {"edges", edges}, {"framing", framing}};
}

Json flow_json(const Flow& f) {
    Json out = Json::object();
    for (size_t k = 0; k < f.size(); ++k) out[std::to_string(k)] = f[k];
    return out;
}

Json to_json(const SHasse& h, const SComp& s) {
    Json nodes = Json::array(), edges = Json::array();
    for (size_t k = 0; k < h.elems.size(); ++k) {
        nodes.push_back({{"id", k}, {"word", format_sword(h.elems[k])}});
        for (int u : h.up[k]) edges.push_back({k, u});
    }
    return Json{{"s", s}, {"nodes", nodes}, {"edges", edges}};
}

Json to_json(const TropicalRealization& r, std::optional<int> approx) {
    Json vertices = Json::object();
    for (const auto& [w, x] : r.vertices) {
        Json coords = Json::array();
        for (const auto& q : x) coords.push_back(to_json(q));
        vertices[format_sword(w)] = coords;
    }
    Json edges = Json::array();
    for (const auto& e : r.edges) {
        Json j{{"from", format_sword(e.from)},
               {"to", format_sword(e.to)},
               {"direction", {e.a, e.c}},
               {"scalar", to_json(e.scalar)}};
        if (approx) j["scalar_decimal"] = decimal(e.scalar, *approx);
        edges.push_back(j);
    }
    Json out{{"s", r.s},
             {"epsilon", to_json(r.eps)},
             {"vertices", vertices},
             {"edges", edges},
             {"coordinate_sum", to_json(r.coordinate_sum)}};
    if (approx) {
        Json dec = Json::object();
        for (const auto& [w, x] : r.vertices) {
            Json coords = Json::array();
            for (const auto& q : x) coords.push_back(decimal(q, *approx));
            dec[format_sword(w)] = coords;
        }
        out["precision"] = *approx;
        out["vertices_decimal"] = dec;
    }
    return out;
}

Json to_json(const LidskiiReport& r, const SComp& s) {
    return Json{{"s", s},
                {"product", r.product.get_str()},
                {"first", r.first.get_str()},
                {"second", r.second.get_str()},
                {"negative_terms", r.negative_terms},
                {"ok", r.ok()}};
}

Json to_json(const SortOutcome& o) {
    Json trace = Json::array();
    for (const auto& st : o.trace)
        trace.push_back({{"perm", format_perm(st.perm)}, {"U", st.U}, {"D", st.D}, {"letter", st.letter}});
    return Json{{"sorted", o.sorted}, {"word", o.word}, {"residual", format_perm(o.residual)}, {"trace", trace}};
}

Json to_json(const Automaton& a) {
    Json states = Json::array();
    for (int q = 0; q < a.size(); ++q)
        states.push_back({{"id", q}, {"label", a.label[q]}, {"class", class_name(a.cls[q])}, {"next", a.next[q]}});
    return Json{{"n", a.n}, {"initial", a.initial}, {"states", states}};
}

Json to_json(const ConjectureReport& r) {
    Json out{{"delta", r.delta.to_string()},
             {"counts", {{"flows", r.flows}, {"permutrees", r.permutrees}, {"cliques", r.cliques}}}};
    if (r.conjecture_1)
        out["conjecture_1"] = {{"status", *r.conjecture_1 ? "PASS" : "FAIL"}, {"rhs", r.rhs_1}};
    else
        out["conjecture_1"] = {{"status", "n/a"}};
    out["conjecture_2"] = {{"status", r.conjecture_2 ? "PASS" : "FAIL"}, {"rhs", r.rhs_2}};
    out["equivariance"] = r.equivariance;
    out["decomposition"] = r.decomposition;
    return out;
}

Json to_json(const BichoGraph& b) {
    Json out = to_json(b.g);
    out["delta"] = b.delta.to_string();
    Json labels = Json::array();
    for (int p = 1; p <= b.n(); ++p)
        for (int k = 0; k < 2; ++k) {
            const char* kind = k == 0 ? "bump" : "dip";
            if (b.step[p][k] >= 0) labels.push_back({{"id", b.step[p][k]}, {"pos", p}, {"kind", kind}, {"type", "step"}});
            if (b.source[p][k] >= 0)
                labels.push_back({{"id", b.source[p][k]}, {"pos", p}, {"kind", kind}, {"type", "source"}});
            if (b.sink[p][k] >= 0) labels.push_back({{"id", b.sink[p][k]}, {"pos", p}, {"kind", kind}, {"type", "sink"}});
        }
    out["labels"] = labels;
    out["netflow"] = bicho_netflow(b.n());
    return out;
}

}  // namespace ptl
