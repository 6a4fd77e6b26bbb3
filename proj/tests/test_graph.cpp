#include "oracles.hpp"

#include "gpoly/canonical.hpp"
#include "gpoly/enumerate.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/graph_io.hpp"
#include "gpoly/random_graphs.hpp"
#include "gpoly/rng.hpp"

#include "doctest.h"

#include <functional>
#include <set>

using namespace gpoly;
using gpoly::testing::brute_isomorphic;

namespace {

// Triangle {0,1,2} with the pendant 2-3; edge 2 joins 0 and 2.
MarkedGraph triangle_pendant() { return unweighted_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

std::multiset<std::pair<int, int>> endpoint_pairs(const MarkedGraph& g)
{
    std::multiset<std::pair<int, int>> out;
    for (const Edge& e : g.edges())
        out.insert({e.u, e.v});
    return out;
}

// Three centers in a path carrying 3, 2 and 1 unit leaves.
MarkedGraph spider()
{
    return unweighted_graph(9, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8}});
}

// Rooted-everywhere AHU code: the minimum over all roots, unlike the centroid code.
std::string all_roots_code(const MarkedGraph& t)
{
    std::size_t n = t.order();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : t.edges()) {
        int a = static_cast<int>(t.index_of(e.u)), b = static_cast<int>(t.index_of(e.v));
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::function<std::string(int, int)> code = [&](int v, int p) {
        std::vector<std::string> kids;
        for (int c : adj[static_cast<std::size_t>(v)])
            if (c != p)
                kids.push_back(code(c, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "0";
        for (const auto& k : kids)
            s += k;
        return s + "1";
    };
    std::string best;
    for (std::size_t r = 0; r < n; ++r) {
        std::string s = code(static_cast<int>(r), -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

MarkedGraph relabel(const MarkedGraph& g, const std::vector<int>& perm)
{
    MarkedGraph h;
    for (std::size_t i = 0; i < g.order(); ++i)
        h.add_vertex(perm[i], g.vertices()[i].mark);
    for (const Edge& e : g.edges())
        h.add_edge(perm[g.index_of(e.u)], perm[g.index_of(e.v)]);
    return h;
}

} // namespace

TEST_SUITE("graph-core")
{
    TEST_CASE("marks and dot-sum")
    {
        CHECK(dot_sum({4, 1}, {2, 0}) == Mark{6, 2});
        CHECK(Mark{3, 1}.strict());
        CHECK_FALSE(Mark{2, 1}.strict());
        CHECK(Mark{2, 1}.valid());
        CHECK_THROWS_AS(make_mark(2, 2), InvalidInput);
        CHECK_THROWS_AS(make_mark(0, 0), InvalidInput);
    }

    TEST_CASE("delete_edge")
    {
        MarkedGraph g = triangle_pendant();
        MarkedGraph d = delete_edge(g, 2);
        CHECK(d.order() == 4);
        CHECK(endpoint_pairs(d) == std::multiset<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
        CHECK(brute_isomorphic(d, unweighted_graph(4, {{0, 1}, {1, 2}, {2, 3}})));

        MarkedGraph single = delete_edge(unweighted_graph(2, {{0, 1}}), 0);
        CHECK(single.order() == 2);
        CHECK(single.size() == 0);

        MarkedGraph par = delete_edge(unweighted_graph(2, {{0, 1}, {0, 1}}), 1);
        CHECK(par.size() == 1);
        CHECK(par.has_edge(0));
    }

    TEST_CASE("contract_edge")
    {
        MarkedGraph e = marked_graph({{4, 1}, {2, 0}}, {{0, 1}});
        MarkedGraph c = contract_edge(e, 0);
        REQUIRE(c.order() == 1);
        CHECK(c.mark(0) == Mark{6, 2});

        MarkedGraph p = contract_edge(weighted_path({4, 1, 2}), 0);
        CHECK(p.order() == 2);
        CHECK(p.mark(0) == Mark{5, 1});
        CHECK(p.mark(2) == Mark{2, 0});
        CHECK(p.size() == 1);

        MarkedGraph loop = contract_edge(unweighted_graph(2, {{0, 1}, {0, 1}}), 0);
        REQUIRE(loop.size() == 1);
        CHECK(loop.edges().front().is_loop());
        CHECK(loop.has_loops());
    }

    TEST_CASE("near_contract")
    {
        NearContraction u = near_contract(unweighted_graph(2, {{0, 1}}), 0);
        CHECK(u.graph.order() == 2);
        CHECK(u.graph.mark(0) == Mark{1, 0});
        CHECK(u.graph.mark(u.leaf) == Mark{1, 0});
        CHECK(u.graph.total_weight() == 2);

        NearContraction m = near_contract(marked_graph({{4, 1}, {2, 0}}, {{0, 1}}), 0);
        CHECK(m.graph.mark(0) == Mark{5, 1});
        CHECK(m.graph.mark(m.leaf) == Mark{1, 0});
        CHECK(m.graph.edge(m.pendant_edge).other(0) == m.leaf);

        // Third child of the root in the star-expansion tree of the triangle with a pendant.
        NearContraction t = near_contract(triangle_pendant(), 2);
        MarkedGraph s = simplify(t.graph);
        CHECK(brute_isomorphic(s, unweighted_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
        CHECK(t.graph.size() == 4);
    }

    TEST_CASE("simplify")
    {
        MarkedGraph g = unweighted_graph(2, {{0, 1}, {0, 1}, {1, 1}});
        MarkedGraph s = simplify(g);
        CHECK(s.size() == 1);
        CHECK(s.is_simple());
        MarkedGraph t = triangle_pendant();
        CHECK(simplify(t) == t);

        // Contracting e in the 7-vertex weighted graph, then dropping parallels.
        // Slots: 0:3 1:2 2:1 3:3 4:2 5:2 6:4, e = {0,2}.
        MarkedGraph g7 = weighted_graph({3, 2, 1, 3, 2, 2, 4},
                                        {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 6}, {6, 5}, {0, 2}, {2, 5}, {3, 5}});
        MarkedGraph merged = simplify(contract_edge(g7, 7));
        CHECK(merged.mark(0) == Mark{4, 1});
        merged.set_mark(0, {4, 0});
        MarkedGraph expected =
            weighted_graph({2, 4, 3, 2, 2, 4}, {{1, 0}, {4, 1}, {2, 4}, {1, 2}, {2, 3}, {3, 5}, {5, 4}});
        CHECK(merged.order() == 6);
        CHECK(merged.size() == 7);
        CHECK(brute_isomorphic(merged, expected));
    }

    TEST_CASE("absorb and core")
    {
        MarkedGraph k = core(spider());
        CHECK(k.order() == 3);
        CHECK(brute_isomorphic(k, weighted_path({4, 3, 2})));
        for (int n = 2; n <= 9; ++n) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i < n; ++i)
                edges.push_back({0, i});
            MarkedGraph c = core(unweighted_graph(n, edges));
            REQUIRE(c.order() == 1);
            CHECK(c.marks().front() == Mark{n, 0});
        }
        MarkedGraph strict = weighted_path({2, 5, 3});
        CHECK(core(strict) == strict);
        CHECK_THROWS_AS(absorb(strict, 0), InvalidInput);
        CHECK(is_absorbable(spider(), 3));
        CHECK_FALSE(is_absorbable(spider(), 0));
    }

    TEST_CASE("spanning_partition")
    {
        MarkedGraph p = weighted_path({4, 1, 2});
        SpanningPartition none = spanning_partition(p, {});
        CHECK(none.parts == std::vector<Mark>{{4, 0}, {2, 0}, {1, 0}});
        CHECK(none.rank == 0);
        SpanningPartition all = spanning_partition(p, {0, 1});
        CHECK(all.parts == std::vector<Mark>{{7, 2}});
        CHECK(all.rank == 2);

        Rng rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            MarkedGraph t = with_random_marks(rng, random_tree(rng, rng.between(1, 9)), 5);
            std::vector<int> a;
            for (int e : t.edge_ids())
                if (rng.chance(1, 2))
                    a.push_back(e);
            SpanningPartition sp = spanning_partition(t, a);
            CHECK(sp.parts.size() == t.order() - a.size());
            long w = 0;
            for (Mark m : sp.parts)
                w += m.w;
            CHECK(w == t.total_weight());
        }
    }

    TEST_CASE("internal edges against a degree count")
    {
        auto by_degree = [](const MarkedGraph& g) {
            std::vector<int> out;
            for (const Edge& e : g.edges())
                if (!e.is_loop() && g.degree(e.u) > 1 && g.degree(e.v) > 1)
                    out.push_back(e.id);
            return out;
        };
        MarkedGraph t = triangle_pendant();
        CHECK(internal_edges(t) == by_degree(t));
        CHECK(internal_edges(t) == std::vector<int>{0, 1, 2});

        MarkedGraph v = unweighted_graph(1, {});
        GraphStats vs = graph_stats(v);
        CHECK(vs.isolated == 1);
        CHECK(vs.m == 0);

        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < 9; ++i)
            edges.push_back({0, i});
        MarkedGraph st9 = unweighted_graph(9, edges);
        GraphStats s = graph_stats(st9);
        CHECK(s.internal_edges.empty());
        CHECK(s.leaves.size() == 8);
        CHECK(is_star_forest(st9));
        CHECK_FALSE(is_star_forest(t));

        Rng rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            MarkedGraph g = random_multigraph(rng, rng.between(1, 6), rng.between(0, 8), 3);
            CHECK(internal_edges(g) == by_degree(g));
        }
    }

    TEST_CASE("uncore")
    {
        CHECK(brute_isomorphic(uncore(weighted_path({4, 3, 2})), spider()));
        MarkedGraph one = uncore(unweighted_graph(1, {}));
        CHECK(one.order() == 1);
        CHECK(one.size() == 0);
        CHECK_THROWS_AS(uncore(marked_graph({{3, 1}}, {})), InvalidInput);

        Rng rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            MarkedGraph t = with_random_weights(rng, random_tree(rng, rng.between(1, 7)), 2, 5);
            CHECK(mark_isomorphic(core(uncore(t)), t));
        }
    }

    TEST_CASE("diameter and predicates")
    {
        CHECK(diameter(weighted_path({1, 1, 1, 1})) == 3);
        CHECK(diameter(unweighted_graph(2, {})) == -1);
        CHECK(diameter(spider()) == 4);
        CHECK(triangle_pendant().is_connected());
        CHECK_FALSE(triangle_pendant().is_forest());
        CHECK(spider().is_forest());
    }

    TEST_CASE("canonical_form")
    {
        MarkedGraph a = weighted_star(3, {2, 4, 4});
        MarkedGraph b = relabel(a, {3, 0, 2, 1});
        CHECK(canonical_form(a) == canonical_form(b));
        CHECK(mark_isomorphic(a, b));
        CHECK_FALSE(mark_isomorphic(weighted_path({2, 1, 2, 3, 1}), weighted_path({2, 3, 1, 2, 1})));
        CHECK_THROWS_AS(canonical_form(triangle_pendant()), InvalidInput);

        Rng rng(17);
        for (int trial = 0; trial < 150; ++trial) {
            int n = rng.between(1, 8);
            MarkedGraph t = with_random_marks(rng, random_forest(rng, n), 3);
            MarkedGraph u = with_random_marks(rng, random_forest(rng, n), 3);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            MarkedGraph p = relabel(t, perm);
            CHECK(canonical_form(t) == canonical_form(p));
            CHECK(brute_isomorphic(t, p));
            CHECK((canonical_form(t) == canonical_form(u)) == brute_isomorphic(t, u));
        }
    }

    TEST_CASE("free tree counts from Pruefer sequences")
    {
        for (int n = 1; n <= 8; ++n) {
            std::set<std::string> classes;
            if (n <= 2) {
                classes.insert(all_roots_code(unweighted_graph(n, n == 2 ? std::vector<std::pair<int, int>>{{0, 1}}
                                                                          : std::vector<std::pair<int, int>>{})));
            } else {
                std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
                for (;;) {
                    classes.insert(all_roots_code(tree_from_pruefer(seq)));
                    std::size_t k = 0;
                    while (k < seq.size() && ++seq[k] == n)
                        seq[k++] = 0;
                    if (k == seq.size())
                        break;
                }
            }
            auto trees = enumerate_free_trees(n);
            CAPTURE(n);
            CHECK(trees.size() == classes.size());
            std::set<std::string> seen;
            for (const auto& t : trees) {
                CHECK(t.order() == static_cast<std::size_t>(n));
                CHECK(t.is_forest());
                CHECK(t.is_connected());
                seen.insert(all_roots_code(t));
            }
            CHECK(seen == classes);
        }
    }

    TEST_CASE("graph6 and JSON")
    {
        MarkedGraph p4 = parse_graph6("Ch");
        CHECK(endpoint_pairs(p4) == std::multiset<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
        MarkedGraph k3 = parse_graph6("Bw");
        CHECK(k3.size() == 3);
        CHECK(to_graph6(unweighted_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == "Ch");
        CHECK(to_graph6(k3) == "Bw");
        CHECK_THROWS_AS(parse_graph6("C"), InvalidInput);

        MarkedGraph m = marked_graph({{4, 1}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(graph_from_json(graph_to_json(m)) == m);
        CHECK(read_graph(graph_to_json(m).dump()) == m);
        CHECK(read_graph("Bw") == k3);
        CHECK_THROWS_AS(read_graph("{\"vertices\":[{\"id\":0,\"w\":1,\"d\":1}],\"edges\":[]}"), InvalidInput);
    }

    TEST_CASE("property battery")
    {
        gpoly::testing::battery_clean("graph.");
    }
}
