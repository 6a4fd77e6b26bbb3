#include "oracles.hpp"
#include "support.hpp"

#include "gpoly/canonical.hpp"
#include "gpoly/csf.hpp"
#include "gpoly/enumerate.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/random_graphs.hpp"
#include "gpoly/reconstruct.hpp"
#include "gpoly/rng.hpp"
#include "gpoly/star_expansion.hpp"

#include "doctest.h"

using namespace gpoly;
using gpoly::testing::tex_poly;
using gpoly::testing::Z;

namespace {

ZPoly d12()
{
    return tex_poly(R"(-z_1^3z_9 + 3z_1^2z_{10} + 2z_1^2z_3z_7 + z_1^2z_4z_6 - 3z_1z_{11} - 4z_1z_3z_8 - 2z_1z_4z_7
        - 2z_1z_3z_4^2 - z_1z_3^2z_5+ z_{12}  + 2z_3z_9  + z_4z_8 + z_3^2z_6 + 2z_3z_4z_5 + z_2z_3^2z_4)");
}

std::vector<int> desc(std::vector<int> v)
{
    std::sort(v.rbegin(), v.rend());
    return v;
}

std::vector<int> leaf_weights_of(const MarkedGraph& t)
{
    std::vector<int> out;
    if (t.order() <= 2) {
        for (Mark m : t.marks())
            out.push_back(m.w);
    } else {
        for (const Vertex& v : t.vertices())
            if (t.degree(v.id) == 1)
                out.push_back(v.mark.w);
    }
    return desc(out);
}

std::vector<int> weights_of(const MarkedGraph& t)
{
    std::vector<int> out;
    for (Mark m : t.marks())
        out.push_back(m.w);
    return desc(out);
}

Shape shape_by_diameter(const MarkedGraph& t)
{
    int d = diameter(t);
    return d <= 2 ? Shape::star : d == 3 ? Shape::two_star : Shape::other;
}

// Independent pairs {e, f}: one edge joins weights w0 and w1, the other w0 and w2.
long independent_pairs(const MarkedGraph& t, int w0, int w1, int w2)
{
    auto joins = [&](const Edge& e, int a, int b) {
        int x = t.mark(e.u).w, y = t.mark(e.v).w;
        return (x == a && y == b) || (x == b && y == a);
    };
    long count = 0;
    const auto& es = t.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge &e = es[i], &f = es[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)
                continue;
            if ((joins(e, w0, w1) && joins(f, w0, w2)) || (joins(e, w0, w2) && joins(f, w0, w1)))
                ++count;
        }
    return count;
}

// Degree-2 terms of M read as strict pairs.
std::vector<StrictPair> pairs_from_m(const ZPoly& m)
{
    std::vector<StrictPair> out;
    ZPoly two = m.z_degree_part(2);
    for (const auto& [mono, c] : two.terms()) {
        auto ms = mono.marks();
        Mark a = ms[0], b = ms[1];
        if (a.w < b.w || (a.w == b.w && a.d > b.d))
            std::swap(a, b);
        for (BigInt k = 0; k < c; ++k)
            out.push_back({a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
}

MarkedGraph random_strict_tree(Rng& rng, int max_n)
{
    return with_random_weights(rng, random_tree(rng, rng.between(1, max_n)), 2, 6);
}

} // namespace

TEST_SUITE("reconstruct")
{
    TEST_CASE("statistics from M")
    {
        TreeStats s = stats_from_m(m_poly(weighted_path({4, 1, 2})));
        CHECK(s.n == 3);
        CHECK(s.N == 7);
        CHECK(s.weights == std::vector<int>{4, 2, 1});
        CHECK(s.leaf_weights == std::vector<int>{4, 2});
        CHECK(s.shape == Shape::star);

        TreeStats v = stats_from_m(Z(6));
        CHECK(v.n == 1);
        CHECK(v.N == 6);

        Rng rng(71);
        for (int trial = 0; trial < 80; ++trial) {
            MarkedGraph t = with_random_weights(rng, random_tree(rng, rng.between(1, 7)), 1, 5);
            TreeStats st = stats_from_m(m_poly(t));
            CHECK(st.n == static_cast<int>(t.order()));
            CHECK(st.N == t.total_weight());
            CHECK(st.weights == weights_of(t));
            CHECK(st.leaf_weights == leaf_weights_of(t));
            CHECK(st.shape == shape_by_diameter(t));
        }
        CHECK_THROWS_AS(stats_from_m(m_poly(unweighted_graph(3, {{0, 1}, {1, 2}, {0, 2}}))), ReconstructionError);
    }

    TEST_CASE("alpha and beta")
    {
        ZPoly m = m_poly(weighted_path({4, 1, 2}));
        CHECK(alpha(m, 4, 1) == 1);
        CHECK(alpha(m, 1, 2) == 1);
        CHECK(alpha(m, 4, 2) == 0);
        CHECK(beta(m, 4, 4, 4) == 0);
        CHECK(beta(m, 1, 4, 2) == 0);

        Rng rng(72);
        for (int trial = 0; trial < 60; ++trial) {
            auto leaves = [&] {
                std::vector<int> l;
                int k = rng.between(1, 4);
                for (int i = 0; i < k; ++i)
                    l.push_back(rng.between(2, 5));
                return l;
            };
            MarkedGraph t = weighted_two_star(rng.between(2, 5), leaves(), rng.between(2, 5), leaves());
            ZPoly mt = m_poly(t);
            for (int w0 = 2; w0 <= 5; ++w0)
                for (int w1 = 2; w1 <= 5; ++w1)
                    for (int w2 = w1; w2 <= 5; ++w2)
                        CHECK(beta(mt, w0, w1, w2) == independent_pairs(t, w0, w1, w2));
        }
    }

    TEST_CASE("stars and 2-stars from M")
    {
        for (int N = 1; N <= 12; ++N)
            for (const auto& t : enumerate_weighted_stars(N)) {
                ZPoly m = m_poly(t);
                CHECK(m_poly(star_from_m(m)) == m);
            }
        for (int N = 4; N <= 11; ++N)
            for (const auto& t : enumerate_weighted_two_stars(N))
                CHECK(mark_isomorphic(twostar_from_m(m_poly(t)), t));
        CHECK_THROWS_AS(star_from_m(m_poly(weighted_two_star(2, {3}, 2, {4}))), ReconstructionError);
        CHECK_THROWS_AS(tree_from_m(m_poly(weighted_path({2, 2, 2, 2, 2}))), ReconstructionError);
    }

    TEST_CASE("2-star with identical centers and leaves")
    {
        MarkedGraph t = weighted_two_star(3, {2, 4, 4}, 3, {2, 4, 4});
        for (const LeafCounts& c : {twostar_counts_from_m(m_poly(t)), twostar_counts_from_d(d_poly(t))}) {
            CHECK(c.center[0] == 3);
            CHECK(c.center[1] == 3);
            CHECK(c.leaf_weight == std::vector<int>{4, 2});
            CHECK(c.mu == std::vector<long>{4, 2});
            CHECK(c.L[0] == std::vector<long>{2, 1});
            CHECK(c.L[1] == std::vector<long>{2, 1});
            CHECK(mark_isomorphic(two_star_from_counts(c), t));
        }
    }

    TEST_CASE("top terms and strict pairs of the N=12 example")
    {
        ZPoly d = d12();
        DTopTerms top = top_and_degree_one_from_d(d);
        CHECK(top.N == 12);
        CHECK(top.n == 4);
        CHECK(desc(top.weights) == std::vector<int>{4, 3, 3, 2});
        CHECK(top.degree_one == ZMonomial::z(12));
        CHECK(top.top == ZMonomial::z(2) * ZMonomial::z(3, 0, 2) * ZMonomial::z(4));

        auto pairs = strict_pairs_from_d2(d_layer(d, 2), 12, 4);
        std::vector<StrictPair> expect{{{8, 2}, {4, 0}}, {{9, 2}, {3, 0}}, {{9, 2}, {3, 0}}};
        std::sort(expect.begin(), expect.end());
        CHECK(pairs == expect);
        TreeStats s = stats_from_d(d);
        CHECK(s.leaf_weights == std::vector<int>{4, 3, 3});
        CHECK(s.shape == Shape::star);
        CHECK(mark_isomorphic(star_from_d(d), weighted_star(2, {3, 3, 4})));

        CHECK(strict_pairs_from_d2(ZPoly(), 0, 0).empty());
        DTopTerms one = top_and_degree_one_from_d(Z(5));
        CHECK(one.n == 1);
        CHECK(one.N == 5);
        CHECK(d_poly(weighted_graph({5}, {})) == Z(5));
        CHECK_THROWS_AS(top_and_degree_one_from_d(d_poly(weighted_path({3, 1, 2}))), ReconstructionError);
    }

    TEST_CASE("strict pairs match the degree-2 layer of M")
    {
        Rng rng(73);
        for (int trial = 0; trial < 60; ++trial) {
            MarkedGraph t = random_strict_tree(rng, 7);
            auto got = strict_pairs_from_d2(d_layer(d_poly(t), 2), t.total_weight(), static_cast<int>(t.order()));
            CHECK(got == pairs_from_m(m_poly_states(t)));
            TreeStats s = stats_from_d(d_poly(t));
            CHECK(s.weights == weights_of(t));
            CHECK(s.leaf_weights == leaf_weights_of(t));
            CHECK(s.shape == shape_by_diameter(t));
        }
    }

    TEST_CASE("edge layer of M recovered from D")
    {
        MarkedGraph p = weighted_path({4, 3, 2});
        CHECK(mdeg_n1_from_d(d_poly(p), 9, 3, {4, 3, 2}) == m_poly_states(p).z_degree_part(2));
        MarkedGraph e = weighted_path({5, 3});
        CHECK(mdeg_n1_from_d(d_poly(e), 8, 2, {5, 3}) == ZPoly::z(8, 1));

        Rng rng(74);
        for (int trial = 0; trial < 40; ++trial) {
            MarkedGraph t = random_strict_tree(rng, 7);
            if (t.order() < 2)
                continue;
            int n = static_cast<int>(t.order());
            CHECK(mdeg_n1_from_d(d_poly(t), t.total_weight(), n, weights_of(t)) == m_poly_states(t).z_degree_part(n - 1));
        }

        MarkedGraph t27 = weighted_two_star(2, {6, 5, 3}, 2, {2, 3, 4});
        std::vector<int> w = weights_of(t27);
        ZPoly layer = mdeg_n1_from_d(d_poly(t27), 27, 8, w);
        ZPoly m = m_poly(t27);
        for (int a : {2, 3, 4, 5, 6})
            for (int b : {2, 3, 4, 5, 6})
                CHECK(alpha(layer, w, a, b) == alpha(m, a, b));
        CHECK(mark_isomorphic(twostar_from_d(d_poly(t27)), t27));
    }

    TEST_CASE("proper trees from the star expansion")
    {
        MarkedGraph spider = unweighted_graph(9, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8}});
        CHECK(canonical_form(tree_from_csf_star(star_expansion(spider))) == canonical_form(spider));
        for (int n = 1; n <= 7; ++n) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 1; i < n; ++i)
                edges.push_back({0, i});
            MarkedGraph st = unweighted_graph(n, edges);
            CHECK(canonical_form(tree_from_csf_star(SymFn::term(Basis::st, {n}))) == canonical_form(st));
        }
        CHECK_THROWS_AS(tree_from_csf_star(SymFn(Basis::st)), ReconstructionError);
        CHECK_THROWS_AS(tree_from_csf_star(SymFn::term(Basis::p, {2})), ReconstructionError);
        MarkedGraph long_path = unweighted_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
        CHECK_THROWS_AS(tree_from_csf_star(star_expansion(long_path)), ReconstructionError);
    }

    TEST_CASE("property battery")
    {
        gpoly::testing::battery_clean("reconstruct.");
    }
}
