#include "gpoly/verify.hpp"

#include "gpoly/canonical.hpp"
#include "gpoly/csf.hpp"
#include "gpoly/enumerate.hpp"
#include "gpoly/graph_io.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/mprime.hpp"
#include "gpoly/random_graphs.hpp"
#include "gpoly/reconstruct.hpp"
#include "gpoly/star_expansion.hpp"
#include "gpoly/substitutions.hpp"
#include "gpoly/vpoly.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gpoly {

bool RunReport::ok() const
{
    if (!collisions.empty() || !failures.empty())
        return false;
    for (const auto& t : invariants)
        if (t.failed != 0)
            return false;
    return true;
}

nlohmann::json report_to_json(const RunReport& r, bool with_timing)
{
    nlohmann::json j;
    j["command"] = r.command;
    j["config"] = r.config;
    j["counts"] = r.counts;
    j["collisions"] = r.collisions;
    j["failures"] = r.failures;
    auto inv = nlohmann::json::array();
    for (const auto& t : r.invariants)
        inv.push_back({{"id", t.id}, {"passed", t.passed}, {"failed", t.failed}, {"failures", t.failures}});
    j["invariants"] = inv;
    j["ok"] = r.ok();
    if (with_timing) {
        auto phases = nlohmann::json::array();
        for (const auto& [name, ns] : r.phases_ns)
            phases.push_back({{"phase", name}, {"ns", ns}});
        j["timing"] = phases;
    }
    return j;
}

int exit_code_for(const RunReport& r)
{
    if (r.ok())
        return 0;
    if (!r.collisions.empty())
        return 20;
    static const std::vector<std::pair<std::string, int>> suites = {
        {"graph.", 10},   {"symfunc.", 11}, {"polyring.", 12},    {"invariants.", 13},
        {"vpoly.", 14},   {"star.", 15},    {"mprime.", 16},      {"reconstruct.", 17},
    };
    for (const auto& t : r.invariants)
        if (t.failed != 0)
            for (const auto& [prefix, code] : suites)
                if (t.id.rfind(prefix, 0) == 0)
                    return code;
    return 1;
}

RunReport verify_stanley(int max_n, unsigned workers)
{
    RunReport r;
    r.command = "verify stanley";
    r.config = {{"max_n", max_n}};
    for (int n = 1; n <= max_n; ++n) {
        PhaseTimer timer(r, "n=" + std::to_string(n));
        std::vector<MarkedGraph> trees = enumerate_free_trees(n);
        auto keys = parallel_map<std::string>(
            trees.size(), [&](std::size_t i) { return to_string(star_expansion(trees[i])); }, workers);
        std::unordered_map<std::string, std::size_t> first;
        for (std::size_t i = 0; i < trees.size(); ++i) {
            auto [it, fresh] = first.emplace(keys[i], i);
            if (!fresh)
                r.collisions.push_back(to_graph6(trees[it->second]) + " " + to_graph6(trees[i]));
        }
        r.counts["trees_n" + std::to_string(n)] = static_cast<long>(trees.size());
    }
    return r;
}

namespace {

using Check = std::function<std::string(Rng&)>;

struct Entry {
    std::string id;
    int percent; // share of the requested trial count
    Check run;
};

std::string fail_with(const std::string& what, const MarkedGraph& g) { return what + " on " + describe(g); }

MarkedGraph disjoint_union(const MarkedGraph& a, const MarkedGraph& b)
{
    MarkedGraph g = a;
    int off = a.next_vertex_id();
    for (const Vertex& v : b.vertices())
        g.add_vertex(v.id + off, v.mark);
    for (const Edge& e : b.edges())
        g.add_edge(e.u + off, e.v + off);
    return g;
}

std::vector<int> non_loop_edges(const MarkedGraph& g)
{
    std::vector<int> out;
    for (const Edge& e : g.edges())
        if (!e.is_loop())
            out.push_back(e.id);
    return out;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[rng.below(v.size())];
}

MarkedGraph small_multigraph(Rng& rng, int max_n = 5, int max_m = 7, int max_w = 4)
{
    int n = rng.between(1, max_n);
    return random_multigraph(rng, n, rng.between(0, max_m), max_w);
}

MarkedGraph random_weighted_tree(Rng& rng, int max_n, int min_w, int max_w)
{
    return with_random_weights(rng, random_tree(rng, rng.between(1, max_n)), min_w, max_w);
}

ZPoly random_zpoly(Rng& rng)
{
    ZPoly f;
    int terms = rng.between(0, 4);
    for (int t = 0; t < terms; ++t) {
        ZMonomial m = ZMonomial::y(rng.between(0, 2));
        int factors = rng.between(0, 3);
        for (int k = 0; k < factors; ++k) {
            Mark mk = random_mark(rng, 4);
            m = m * ZMonomial::z(mk.w, mk.d);
        }
        f.add(m, rng.between(-3, 3));
    }
    return f;
}

// d_bullet with the sign of its last term flipped.
ZPoly mutated_d_bullet(int w, int d)
{
    ZPoly f = d_bullet(w, d);
    if (d == 0)
        return f;
    ZMonomial last = ZMonomial::z(w - d) * ZMonomial::z(1, 0, d);
    BigInt c = f.coeff(last);
    f.add(last, -2 * c);
    return f;
}

bool same_signs_per_partition(const DncTree& t)
{
    std::map<Partition, std::set<int>> signs;
    for (int leaf : t.leaves())
        signs[star_forest_type(t.nodes[leaf].graph)].insert(dnc_sign(t, t.path_to(leaf)));
    for (const auto& [lambda, s] : signs)
        if (s.size() != 1)
            return false;
    return true;
}

MarkedGraph random_proper_tree(Rng& rng, int max_n)
{
    MarkedGraph t = random_tree(rng, rng.between(2, max_n));
    for (int v : t.vertex_ids()) {
        if (t.degree(v) <= 1)
            continue;
        bool has_leaf = false;
        for (int e : t.incident_edges(v))
            has_leaf = has_leaf || t.degree(t.edge(e).other(v)) == 1;
        if (!has_leaf)
            t.add_edge(v, t.add_vertex());
    }
    return t;
}

std::vector<int> random_strict_weights(Rng& rng, int count, int max_w)
{
    std::vector<int> w(static_cast<std::size_t>(count));
    for (int& x : w)
        x = rng.between(2, max_w);
    return w;
}

MarkedGraph random_strict_star_or_two_star(Rng& rng)
{
    if (rng.chance(1, 3))
        return weighted_star(rng.between(2, 5), random_strict_weights(rng, rng.between(0, 4), 5));
    int c0 = rng.between(2, 4);
    int c1 = rng.chance(1, 2) ? c0 : rng.between(2, 4);
    return weighted_two_star(c0, random_strict_weights(rng, rng.between(1, 3), 5), c1,
                             random_strict_weights(rng, rng.between(1, 3), 5));
}

std::vector<Entry> battery(bool mutate)
{
    std::vector<Entry> b;

    b.push_back({"graph.weight-preserved", 100, [](Rng& rng) -> std::string {
                     MarkedGraph g = small_multigraph(rng);
                     long total = g.total_weight();
                     for (int e : non_loop_edges(g)) {
                         MarkedGraph c = contract_edge(g, e);
                         NearContraction nc = near_contract(g, e);
                         if (c.total_weight() != total || c.order() + 1 != g.order())
                             return fail_with("contraction", g);
                         if (nc.graph.total_weight() != total || nc.graph.order() != g.order())
                             return fail_with("near-contraction", g);
                     }
                     MarkedGraph k = core(g);
                     if (k.total_weight() != total)
                         return fail_with("core", g);
                     return {};
                 }});

    b.push_back({"graph.near-contract-then-contract", 100, [](Rng& rng) -> std::string {
                     MarkedGraph g = small_multigraph(rng);
                     for (int e : non_loop_edges(g)) {
                         NearContraction nc = near_contract(g, e);
                         if (!same_labeled_structure(contract_edge(nc.graph, nc.pendant_edge), contract_edge(g, e)))
                             return fail_with("edge " + std::to_string(e), g);
                     }
                     return {};
                 }});

    b.push_back({"graph.core-confluent", 100, [](Rng& rng) -> std::string {
                     MarkedGraph g = with_random_marks(rng, random_forest(rng, rng.between(1, 9)), 2);
                     MarkedGraph h = g;
                     for (;;) {
                         std::vector<int> options;
                         for (const Edge& e : h.edges())
                             if (!e.is_loop() && (is_absorbable(h, e.u) || is_absorbable(h, e.v)))
                                 options.push_back(e.id);
                         if (options.empty())
                             break;
                         h = absorb(h, pick(rng, options));
                     }
                     MarkedGraph k = core(g);
                     if (!mark_isomorphic(h, k))
                         return fail_with("random absorption order", g);
                     if (!same_labeled_structure(core(k), k))
                         return fail_with("idempotence", g);
                     return {};
                 }});

    b.push_back({"graph.internal-edges-decrease", 100, [](Rng& rng) -> std::string {
                     MarkedGraph g = random_simple_graph(rng, rng.between(2, 7), 45);
                     std::size_t before = internal_edges(g).size();
                     for (int e : internal_edges(g)) {
                         NearContraction nc = near_contract(g, e);
                         MarkedGraph s = simplify(nc.graph);
                         MarkedGraph children[3] = {delete_edge(g, e), s, delete_edge(s, nc.pendant_edge)};
                         for (const auto& c : children)
                             if (internal_edges(c).size() >= before)
                                 return fail_with("edge " + std::to_string(e), g);
                     }
                     return {};
                 }});

    b.push_back({"symfunc.csf-matches-star-expansion", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = random_simple_graph(rng, rng.between(1, 8), 35);
                     if (p_to_st(csf_power(g)) != star_expansion(g))
                         return fail_with("mismatch", g);
                     return {};
                 }});

    b.push_back({"symfunc.tree-p-coefficients", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = random_tree(rng, rng.between(1, 8));
                     int n = static_cast<int>(t.order());
                     std::size_t m = t.size();
                     std::map<Partition, long> count;
                     for (unsigned long sub = 0; sub < (1ul << m); ++sub) {
                         std::vector<int> edges;
                         for (std::size_t k = 0; k < m; ++k)
                             if (sub >> k & 1ul)
                                 edges.push_back(t.edges()[k].id);
                         SpanningPartition sp = spanning_partition(t, edges);
                         Partition lambda;
                         for (Mark mk : sp.parts)
                             lambda.push_back(mk.w);
                         lambda = normalize_partition(lambda);
                         if (static_cast<int>(lambda.size()) != n - static_cast<int>(edges.size()))
                             return fail_with("length of λ(A)", t);
                         ++count[lambda];
                     }
                     SymFn x = csf_power(t);
                     if (x.term_count() != count.size())
                         return fail_with("support", t);
                     for (const auto& [lambda, c] : count) {
                         BigInt got = x.coeff(lambda);
                         BigInt expect = (n - static_cast<int>(lambda.size())) % 2 == 0 ? BigInt(c) : BigInt(-c);
                         if (got != expect)
                             return fail_with("coefficient of p[" + to_string(lambda) + "]", t);
                     }
                     return {};
                 }});

    b.push_back({"symfunc.weighted-csf-identity", 50, [](Rng& rng) -> std::string {
                     int n = rng.between(1, 4);
                     MarkedGraph g = with_random_weights(rng, random_simple_graph(rng, n, 50), 1, 3);
                     if (g.size() > 5)
                         return {};
                     int vars = std::min(n, 3);
                     if (p_to_monomials(csf_from_w(g), vars) != weighted_csf(g, vars))
                         return fail_with("monomial expansion", g);
                     return {};
                 }});

    b.push_back({"polyring.ring-laws", 100, [](Rng& rng) -> std::string {
                     ZPoly f = random_zpoly(rng), g = random_zpoly(rng), h = random_zpoly(rng);
                     if ((f * g) * h != f * (g * h) || f * g != g * f || f * (g + h) != f * g + f * h ||
                         (f + g) - g != f)
                         return "ring law fails for f = " + to_string(f) + ", g = " + to_string(g) +
                                ", h = " + to_string(h);
                     return {};
                 }});

    b.push_back({"polyring.undot-homomorphism", 100, [](Rng& rng) -> std::string {
                     ZPoly f = random_zpoly(rng), g = random_zpoly(rng);
                     if (undot(f * g) != undot(f) * undot(g) || undot(f + g) != undot(f) + undot(g))
                         return "undot(fg) != undot(f)undot(g) for f = " + to_string(f) + ", g = " + to_string(g);
                     return {};
                 }});

    b.push_back({"polyring.pascal-identity", 100, [mutate](Rng& rng) -> std::string {
                     auto bullet = mutate ? mutated_d_bullet : d_bullet;
                     int w = rng.between(2, 9);
                     int d = rng.between(1, w - 1);
                     ZPoly lhs = bullet(w, d);
                     ZPoly rhs = bullet(w, d - 1) - ZPoly::z(1) * bullet(w - 1, d - 1);
                     if (lhs != rhs)
                         return "Pascal identity fails at (" + std::to_string(w) + "," + std::to_string(d) + ")";
                     return {};
                 }});

    b.push_back({"polyring.strict-tree-abs-sum", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = random_weighted_tree(rng, 7, 2, 5);
                     if (undot(m_poly(t)).abs_coeff_sum() != ipow(3, static_cast<unsigned>(t.order() - 1)))
                         return fail_with("Σ|c| != 3^(n-1)", t);
                     return {};
                 }});

    b.push_back({"invariants.order-independence", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = small_multigraph(rng);
                     ZPoly ref = m_poly_dc(g);
                     for (int k = 0; k < 5; ++k) {
                         std::vector<int> order = g.edge_ids();
                         rng.shuffle(order);
                         if (m_poly_dc(g, order) != ref)
                             return fail_with("edge order changes M", g);
                     }
                     return {};
                 }});

    b.push_back({"invariants.states-dc-bond-agree", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = small_multigraph(rng);
                     ZPoly s = m_poly_states(g);
                     if (m_poly_dc(g) != s || m_poly_bond(g) != s)
                         return fail_with("representations disagree", g);
                     return {};
                 }});

    b.push_back({"invariants.multiplicative", 100, [](Rng& rng) -> std::string {
                     MarkedGraph a = small_multigraph(rng, 4, 4), c = small_multigraph(rng, 4, 4);
                     MarkedGraph u = disjoint_union(a, c);
                     if (m_poly(u) != m_poly(a) * m_poly(c))
                         return fail_with("M(G1 ⊔ G2) != M(G1) M(G2)", u);
                     return {};
                 }});

    b.push_back({"invariants.tree-extreme-terms", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = random_weighted_tree(rng, 8, 1, 5);
                     int n = static_cast<int>(t.order());
                     ZPoly m = m_poly(t);
                     ZPoly one = m.z_degree_part(1);
                     if (one != ZPoly::monomial(ZMonomial::z(static_cast<int>(t.total_weight()), n - 1)))
                         return fail_with("degree-1 term", t);
                     if (m.z_degree_part(n) != ZPoly::monomial(ZMonomial::from_marks(t.marks())))
                         return fail_with("top-degree term", t);
                     return {};
                 }});

    b.push_back({"invariants.y0-collapse", 100, [](Rng& rng) -> std::string {
                     // Loops are excluded: a loop contributes a factor y.
                     MarkedGraph g = small_multigraph(rng);
                     for (int e : g.edge_ids())
                         if (g.edge(e).is_loop())
                             g.remove_edge(e);
                     if (m_poly(g).at_y_zero() != m_poly(simplify(g)).at_y_zero())
                         return fail_with("M(G, y=0) != M(G^s, y=0)", g);
                     return {};
                 }});

    b.push_back({"invariants.three-term", 100, [](Rng& rng) -> std::string {
                     MarkedGraph g = small_multigraph(rng);
                     auto edges = non_loop_edges(g);
                     if (edges.empty())
                         return {};
                     int e = pick(rng, edges);
                     NearContraction nc = near_contract(g, e);
                     ZPoly rhs = m_poly(delete_edge(g, e)) - m_poly(delete_edge(nc.graph, nc.pendant_edge)) +
                                 m_poly(nc.graph);
                     if (m_poly(g) != rhs)
                         return fail_with("edge " + std::to_string(e), g);
                     return {};
                 }});

    b.push_back({"invariants.cancellation-dichotomy", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = with_random_weights(rng, random_tree(rng, rng.between(2, 6)), 1, 4);
                     bool strict = true;
                     for (Mark mk : t.marks())
                         strict = strict && mk.strict();
                     bool three = d_poly(t).abs_coeff_sum() == ipow(3, static_cast<unsigned>(t.order() - 1));
                     if (three != strict)
                         return fail_with("Σ|c| of D vs strictness", t);
                     MarkedGraph mt = with_random_marks(rng, random_tree(rng, rng.between(2, 6)), 4);
                     bool mstrict = true;
                     for (Mark mk : mt.marks())
                         mstrict = mstrict && mk.strict();
                     if (undot_is_cancellation_free(m_poly_states(mt)) != mstrict)
                         return fail_with("cancellation-free undotting vs strict marks", mt);
                     return {};
                 }});

    b.push_back({"invariants.w-from-d", 100, [](Rng& rng) -> std::string {
                     MarkedGraph g = with_random_weights(rng, small_multigraph(rng), 2, 4);
                     if (w_from_d(g) != w_poly(g))
                         return fail_with("W != D(z_1 = 0)", g);
                     return {};
                 }});

    b.push_back({"invariants.csf-from-d", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = random_simple_graph(rng, rng.between(1, 7), 40);
                     if (csf_from_d(g) != p_to_st(csf_power(g)))
                         return fail_with("X from D differs", g);
                     return {};
                 }});

    b.push_back({"vpoly.recipe", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = small_multigraph(rng, 4, 5);
                     auto labels = mark_labels(g);
                     auto spec = mark_semigroup();
                     VPoly v = v_poly_states(g, labels, spec);
                     if (v_poly_recursive(g, labels, spec) != v)
                         return fail_with("recursive V != states V", g);
                     ZPoly scale = (ZPoly::y() - ZPoly(1)).pow(static_cast<unsigned>(g.order()));
                     if (mark_vpoly_at_y(v) != scale * m_poly(g))
                         return fail_with("V at γ = y-1 != (y-1)^|V| M", g);
                     EdgeWeights alpha, beta, gamma;
                     Rational prod = 1;
                     for (int e : g.edge_ids()) {
                         alpha[e] = Rational(rng.between(1, 4), rng.between(1, 3));
                         beta[e] = Rational(rng.between(-3, 3), rng.between(1, 3));
                         gamma[e] = beta[e] / alpha[e];
                         prod *= alpha[e];
                     }
                     VValue expect = evaluate_gamma(v, gamma);
                     for (auto& [k, c] : expect)
                         c *= prod;
                     for (auto it = expect.begin(); it != expect.end();)
                         it = it->second == 0 ? expect.erase(it) : std::next(it);
                     if (recipe_eval(g, labels, spec, alpha, beta) != expect)
                         return fail_with("recipe != Π α_e · V(β/α)", g);
                     return {};
                 }});

    b.push_back({"star.rule-independence", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = random_simple_graph(rng, rng.between(1, 8), 35);
                     DncOptions a, c;
                     c.rule = EdgeRule::largest;
                     a.memoize = c.memoize = false;
                     if (dnc_expand(g, a).st != dnc_expand(g, c).st)
                         return fail_with("edge rule changes the expansion", g);
                     return {};
                 }});

    b.push_back({"star.no-cancellation", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = random_simple_graph(rng, rng.between(1, 7), 40);
                     DncOptions o;
                     o.emit_tree = true;
                     DncResult r = dnc_expand(g, o);
                     if (!same_signs_per_partition(*r.tree))
                         return fail_with("mixed signs for one λ", g);
                     if (!isolated_sign_rule_holds(r.st, graph_stats(g).isolated))
                         return fail_with("isolated-vertex sign rule", g);
                     return {};
                 }});

    b.push_back({"star.tree-size-bound", 50, [](Rng& rng) -> std::string {
                     MarkedGraph g = random_simple_graph(rng, rng.between(1, 7), 40);
                     DncOptions o;
                     o.emit_tree = true;
                     DncTree t = *dnc_expand(g, o).tree;
                     unsigned k = static_cast<unsigned>(internal_edges(g).size());
                     if (BigInt(t.leaves().size()) > ipow(3, k) || BigInt(t.nodes.size()) > (ipow(3, k + 1) - 1) / 2)
                         return fail_with("tree larger than the 3^k bound", g);
                     for (const auto& node : t.nodes)
                         if (node.parent >= 0 &&
                             internal_edges(node.graph).size() >= internal_edges(t.nodes[node.parent].graph).size())
                             return fail_with("child without fewer internal edges", g);
                     return {};
                 }});

    b.push_back({"mprime.strict-and-cancellation-free", 100, [](Rng& rng) -> std::string {
                     MarkedGraph f = random_tree(rng, rng.between(2, 7));
                     for (int v : f.vertex_ids())
                         if (!rng.chance(1, 3))
                             f.set_mark(v, random_mark(rng, 5, true));
                     ZPoly mp = m_prime(f, hashed_order(rng.next()));
                     for (const auto& [mono, c] : mp.terms())
                         for (Mark mk : mono.marks())
                             if (!mk.strict())
                                 return fail_with("non-strict variable " + to_string(mk), f);
                     if (!undot_is_cancellation_free(mp))
                         return fail_with("undotting M' cancels", f);
                     return {};
                 }});

    b.push_back({"mprime.partial-states", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = with_random_marks(rng, random_tree(rng, rng.between(1, 7)), 4);
                     std::vector<int> bset;
                     for (int e : t.edge_ids())
                         if (rng.chance(1, 2))
                             bset.push_back(e);
                     if (partial_states(t, bset) != m_poly(t))
                         return fail_with("Σ M(T/A1∖A2) != M(T)", t);
                     return {};
                 }});

    b.push_back({"mprime.undot-equals-d", 100, [](Rng& rng) -> std::string {
                     MarkedGraph f = with_random_marks(rng, random_forest(rng, rng.between(1, 7)), 4);
                     if (!m_prime_undot_check(f, hashed_order(rng.next())))
                         return fail_with("undot(M') != D", f);
                     return {};
                 }});

    b.push_back({"reconstruct.round-trip", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = random_strict_star_or_two_star(rng);
                     if (!mark_isomorphic(tree_from_m(m_poly(t)), t))
                         return fail_with("from M", t);
                     if (!mark_isomorphic(tree_from_d(d_poly(t)), t))
                         return fail_with("from D", t);
                     return {};
                 }});

    b.push_back({"reconstruct.solver-symmetry", 100, [](Rng& rng) -> std::string {
                     int c = rng.between(2, 4);
                     MarkedGraph t = weighted_two_star(c, random_strict_weights(rng, rng.between(1, 3), 5), c,
                                                       random_strict_weights(rng, rng.between(1, 3), 5));
                     LeafCounts lc = twostar_counts_from_m(m_poly(t));
                     LeafCounts swapped = lc;
                     std::swap(swapped.L[0], swapped.L[1]);
                     if (canonical_form(two_star_from_counts(lc)) != canonical_form(two_star_from_counts(swapped)))
                         return fail_with("swapped solution not isomorphic", t);
                     return {};
                 }});

    b.push_back({"reconstruct.stats-complete", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = random_weighted_tree(rng, 8, 1, 5);
                     TreeStats s = stats_from_m(m_poly(t));
                     std::vector<int> weights, leaves;
                     int internal = 0;
                     for (const Vertex& v : t.vertices()) {
                         weights.push_back(v.mark.w);
                         if (t.degree(v.id) <= 1)
                             leaves.push_back(v.mark.w);
                         else
                             ++internal;
                     }
                     std::sort(weights.rbegin(), weights.rend());
                     std::sort(leaves.rbegin(), leaves.rend());
                     Shape shape = internal <= 1 ? Shape::star : internal == 2 ? Shape::two_star : Shape::other;
                     if (s.n != static_cast<int>(t.order()) || s.N != t.total_weight() || s.weights != weights ||
                         s.leaf_weights != leaves || s.shape != shape)
                         return fail_with("stats differ", t);
                     return {};
                 }});

    b.push_back({"reconstruct.proper-tree-sign-uniform", 100, [](Rng& rng) -> std::string {
                     MarkedGraph t = random_proper_tree(rng, 9);
                     if (!undot_is_cancellation_free(m_poly(core(t)).at_y_zero()))
                         return fail_with("star expansion of a proper tree cancels", t);
                     return {};
                 }});

    return b;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::vector<std::string> invariant_ids()
{
    std::vector<std::string> ids;
    for (const auto& e : battery(false))
        ids.push_back(e.id);
    return ids;
}

RunReport verify_invariants(const InvariantOptions& opts)
{
    RunReport r;
    r.command = "verify invariants";
    r.config = {{"seed", opts.seed}, {"trials", opts.trials}, {"mutate_undot_sign", opts.mutate_undot_sign}};
    if (!opts.only.empty())
        r.config["only"] = opts.only;
    auto entries = battery(opts.mutate_undot_sign);
    long ran = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        if (e.id.rfind(opts.only, 0) != 0)
            continue;
        ++ran;
        PhaseTimer timer(r, e.id);
        InvariantTally tally{e.id, 0, 0, {}};
        Rng rng(splitmix(opts.seed ^ splitmix(i)));
        long trials = std::max(1L, static_cast<long>(opts.trials) * e.percent / 100);
        for (long k = 0; k < trials; ++k) {
            std::string why;
            try {
                why = e.run(rng);
            } catch (const std::exception& ex) {
                why = std::string("exception: ") + ex.what();
            }
            if (why.empty()) {
                ++tally.passed;
            } else {
                ++tally.failed;
                if (tally.failures.size() < 5)
                    tally.failures.push_back(why);
            }
        }
        r.invariants.push_back(std::move(tally));
    }
    r.counts["invariants"] = ran;
    return r;
}

} // namespace gpoly
