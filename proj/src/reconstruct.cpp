#include "gpoly/reconstruct.hpp"

#include "gpoly/errors.hpp"
#include "gpoly/substitutions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

namespace gpoly {

std::string to_string(Shape s)
{
    switch (s) {
    case Shape::star:
        return "star";
    case Shape::two_star:
        return "two-star";
    default:
        return "other";
    }
}

namespace {

using Multiset = std::vector<int>; // decreasing

Multiset sorted_desc(Multiset v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::optional<Multiset> remove_all(Multiset from, const Multiset& gone)
{
    for (int x : gone) {
        auto it = std::find(from.begin(), from.end(), x);
        if (it == from.end())
            return std::nullopt;
        from.erase(it);
    }
    return from;
}

ZMonomial undotted(const Multiset& ws)
{
    ZMonomial m;
    for (int w : ws)
        m = m * ZMonomial::z(w, 0);
    return m;
}

long to_long(const BigInt& v) { return v.convert_to<long>(); }

[[noreturn]] void fail(const std::string& why) { throw ReconstructionError(why); }

Shape shape_for(int n, std::size_t leaves)
{
    if (n <= 2 || static_cast<int>(leaves) == n - 1)
        return Shape::star;
    if (n >= 4 && static_cast<int>(leaves) == n - 2)
        return Shape::two_star;
    return Shape::other;
}

void group_leaves(const Multiset& leaves, LeafCounts& c)
{
    for (int w : leaves) {
        if (c.leaf_weight.empty() || c.leaf_weight.back() != w) {
            c.leaf_weight.push_back(w);
            c.mu.push_back(0);
        }
        ++c.mu.back();
    }
    c.L[0].assign(c.leaf_weight.size(), 0);
    c.L[1].assign(c.leaf_weight.size(), 0);
}

std::pair<int, int> centers_of(const TreeStats& s)
{
    auto rest = remove_all(s.weights, s.leaf_weights);
    if (!rest || rest->size() != 2)
        fail("leaf weights are not a sub-multiset of the vertex weights");
    return {(*rest)[0], (*rest)[1]};
}

// Centers of different weight: read L off the α values.
LeafCounts solve_distinct(LeafCounts c, const std::function<BigInt(int, int)>& alpha_of)
{
    int u0 = c.center[0], u1 = c.center[1];
    for (std::size_t j = 0; j < c.leaf_weight.size(); ++j) {
        int w = c.leaf_weight[j];
        long a0 = to_long(alpha_of(u0, w)), a1 = to_long(alpha_of(u1, w));
        c.L[0][j] = w != u1 ? a0 : c.mu[j] - a1;
        c.L[1][j] = w != u0 ? a1 : c.mu[j] - a0;
        if (c.L[0][j] < 0 || c.L[1][j] < 0 || c.L[0][j] + c.L[1][j] != c.mu[j])
            fail("inconsistent edge counts for leaf weight " + std::to_string(w));
    }
    return c;
}

// Centers of equal weight: L_{0,j} + L_{1,j} = μ_j and L_{0,j} L_{1,j} = β(j,j);
// once one j has two different roots the cross terms
// L_{0,j1} L_{1,j2} + L_{0,j2} L_{1,j1} = β(j1,j2) fix the rest.
LeafCounts solve_equal(LeafCounts c, const std::function<BigInt(std::size_t, std::size_t)>& beta_of)
{
    std::size_t k = c.leaf_weight.size();
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < k; ++j) {
        BigInt mu = c.mu[j];
        BigInt disc = mu * mu - 4 * beta_of(j, j);
        if (disc < 0)
            fail("negative discriminant for leaf weight " + std::to_string(c.leaf_weight[j]));
        BigInt r = boost::multiprecision::sqrt(disc);
        if (r * r != disc || (mu + r) % 2 != 0)
            fail("discriminant is not an admissible square for leaf weight " + std::to_string(c.leaf_weight[j]));
        if (r != 0 && !pivot) {
            pivot = j;
            c.L[0][j] = to_long((mu + r) / 2);
            c.L[1][j] = to_long((mu - r) / 2);
        }
    }
    if (!pivot) {
        for (std::size_t j = 0; j < k; ++j) {
            if (c.mu[j] % 2 != 0)
                fail("odd multiplicity with a zero discriminant");
            c.L[0][j] = c.L[1][j] = c.mu[j] / 2;
        }
        return c;
    }
    std::size_t p = *pivot;
    long a = c.L[0][p], b = c.L[1][p];
    for (std::size_t j = 0; j < k; ++j) {
        if (j == p)
            continue;
        // a (μ - x) + x b = β  =>  x = (β - a μ) / (b - a)
        BigInt num = beta_of(std::min(p, j), std::max(p, j)) - BigInt(a) * c.mu[j];
        BigInt den = b - a;
        if (num % den != 0)
            fail("cross-term system has no integer solution");
        long x = to_long(num / den);
        if (x < 0 || x > c.mu[j])
            fail("cross-term system gives a negative count");
        c.L[0][j] = x;
        c.L[1][j] = c.mu[j] - x;
    }
    return c;
}

void require_nonempty_stars(const LeafCounts& c)
{
    for (int i = 0; i < 2; ++i)
        if (std::accumulate(c.L[i].begin(), c.L[i].end(), 0L) == 0)
            fail("a center of the 2-star received no leaves");
}

} // namespace

TreeStats stats_from_m(const ZPoly& m)
{
    TreeStats s;
    std::optional<ZMonomial> one;
    for (const auto& [mono, c] : m.terms()) {
        if (mono.y_exp() != 0)
            fail("M has a y term: not a tree");
        if (mono.z_degree() == 1) {
            if (one)
                fail("M has more than one degree-1 term");
            if (c != 1)
                fail("degree-1 coefficient is not 1");
            one = mono;
        }
    }
    if (!one)
        fail("M has no degree-1 term");
    Mark total = one->marks().front();
    s.N = total.w;
    s.n = total.d + 1;
    ZPoly top = m.z_degree_part(s.n);
    if (top.term_count() != 1 || m.max_z_degree() != s.n)
        fail("M has no unique top-degree term");
    for (Mark mk : top.terms().begin()->first.marks()) {
        if (mk.d != 0)
            fail("top-degree term is dotted");
        s.weights.push_back(mk.w);
    }
    s.weights = sorted_desc(s.weights);
    if (std::accumulate(s.weights.begin(), s.weights.end(), 0L) != s.N)
        fail("vertex weights do not add up to the total weight");
    if (s.n <= 2) {
        s.leaf_weights = s.weights;
    } else {
        ZPoly two = m.z_degree_part(2);
        for (const auto& [mono, c] : two.terms()) {
            auto ms = mono.marks();
            for (Mark mk : ms)
                if (mk.d == 0)
                    s.leaf_weights.insert(s.leaf_weights.end(), static_cast<std::size_t>(to_long(c)), mk.w);
        }
        s.leaf_weights = sorted_desc(s.leaf_weights);
    }
    if (!remove_all(s.weights, s.leaf_weights))
        fail("leaf weights are not a sub-multiset of the vertex weights");
    s.shape = shape_for(s.n, s.leaf_weights.size());
    return s;
}

BigInt alpha(const ZPoly& m, const std::vector<int>& weights, int w1, int w2)
{
    auto rest = remove_all(weights, {w1, w2});
    if (!rest)
        return 0;
    return m.coeff(ZMonomial::z(w1 + w2, 1) * undotted(*rest));
}

BigInt alpha(const ZPoly& m, int w1, int w2) { return alpha(m, stats_from_m(m).weights, w1, w2); }

BigInt beta(const ZPoly& m, const std::vector<int>& weights, int w0, int w1, int w2)
{
    auto rest = remove_all(weights, {w0, w0, w1, w2});
    if (!rest)
        return 0;
    return m.coeff(ZMonomial::z(w0 + w1, 1) * ZMonomial::z(w0 + w2, 1) * undotted(*rest));
}

BigInt beta(const ZPoly& m, int w0, int w1, int w2) { return beta(m, stats_from_m(m).weights, w0, w1, w2); }

MarkedGraph star_from_m(const ZPoly& m)
{
    TreeStats s = stats_from_m(m);
    if (s.shape != Shape::star)
        fail("M is not the M-polynomial of a star");
    if (s.n == 1)
        return weighted_graph({static_cast<int>(s.N)}, {});
    if (s.n == 2)
        return weighted_path(s.weights);
    long center = s.N - std::accumulate(s.leaf_weights.begin(), s.leaf_weights.end(), 0L);
    return weighted_star(static_cast<int>(center), s.leaf_weights);
}

MarkedGraph two_star_from_counts(const LeafCounts& c)
{
    std::vector<int> leaves[2];
    for (int i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < c.leaf_weight.size(); ++j)
            leaves[i].insert(leaves[i].end(), static_cast<std::size_t>(c.L[i][j]), c.leaf_weight[j]);
    return weighted_two_star(c.center[0], leaves[0], c.center[1], leaves[1]);
}

LeafCounts twostar_counts_from_m(const ZPoly& m)
{
    TreeStats s = stats_from_m(m);
    if (s.shape != Shape::two_star)
        fail("M is not the M-polynomial of a 2-star");
    LeafCounts c;
    std::tie(c.center[0], c.center[1]) = centers_of(s);
    group_leaves(s.leaf_weights, c);
    if (c.center[0] != c.center[1]) {
        c = solve_distinct(c, [&](int a, int b) { return alpha(m, s.weights, a, b); });
    } else {
        int u = c.center[0];
        c = solve_equal(c, [&](std::size_t j1, std::size_t j2) {
            return beta(m, s.weights, u, c.leaf_weight[j1], c.leaf_weight[j2]);
        });
    }
    require_nonempty_stars(c);
    return c;
}

MarkedGraph twostar_from_m(const ZPoly& m) { return two_star_from_counts(twostar_counts_from_m(m)); }

MarkedGraph tree_from_m(const ZPoly& m)
{
    switch (stats_from_m(m).shape) {
    case Shape::star:
        return star_from_m(m);
    case Shape::two_star:
        return twostar_from_m(m);
    default:
        fail("only stars and 2-stars can be reconstructed");
    }
}

DTopTerms top_and_degree_one_from_d(const ZPoly& d)
{
    DTopTerms out;
    std::optional<ZMonomial> one, top;
    int top_degree = -1;
    bool top_unique = false;
    for (const auto& [mono, c] : d.terms()) {
        if (mono.y_exp() != 0)
            fail("D has a y term: not a tree");
        for (const auto& f : mono.factors())
            if (f.d != 0)
                fail("D contains a dotted variable");
        if (mono.z_degree() == 1) {
            if (one)
                fail("D has more than one degree-1 term");
            if (c != 1)
                fail("degree-1 coefficient is not 1");
            one = mono;
        }
        if (mono.exponent({1, 0}) == 0) {
            if (mono.z_degree() > top_degree) {
                top_degree = mono.z_degree();
                top = mono;
                top_unique = c == 1;
            } else if (mono.z_degree() == top_degree) {
                top_unique = false;
            }
        }
    }
    if (!one)
        fail("D has no degree-1 term");
    if (!top || !top_unique)
        fail("D has no unique top-degree term free of z_1");
    out.degree_one = *one;
    out.top = *top;
    out.N = one->factors().front().w;
    out.n = top_degree;
    if (d.max_z_degree() != out.n)
        fail("D has a z_1-divisible term above the top z_1-free degree: not strictly weighted");
    for (Mark mk : top->marks())
        out.weights.push_back(mk.w);
    if (std::accumulate(out.weights.begin(), out.weights.end(), 0L) != out.N)
        fail("vertex weights do not add up to the total weight");
    return out;
}

ZPoly d_layer(const ZPoly& d, int k)
{
    ZPoly out;
    for (const auto& [mono, c] : d.terms())
        if (mono.z_degree() - mono.exponent({1, 0}) == k)
            out.add(mono, c);
    return out;
}

std::vector<StrictPair> strict_pairs_from_d2(const ZPoly& d2, long N, int n)
{
    std::vector<StrictPair> out;
    ZPoly q = d2;
    int dots = n - 2; // k1 + k2
    while (!q.is_zero()) {
        if (static_cast<int>(out.size()) >= std::max(n - 1, 0))
            fail("degree-2 layer does not peel off into strict pairs");
        long a0 = 0;
        for (long a = 2; 2 * a <= N && a0 == 0; ++a)
            if (q.coeff(ZMonomial::z(static_cast<int>(N - a)) * ZMonomial::z(static_cast<int>(a))) != 0)
                a0 = a;
        if (a0 == 0)
            fail("degree-2 layer has no z_{N-a} z_a term");
        int big = static_cast<int>(N - a0), small = static_cast<int>(a0);
        int d0 = 0;
        for (int t = small - 2; t > 0; --t)
            if (q.coeff(ZMonomial::z(big) * ZMonomial::z(small - t) * ZMonomial::z(1, 0, t)) != 0) {
                d0 = t;
                break;
            }
        int k1 = dots - d0;
        if (k1 < 0 || !Mark{big, k1}.strict() || !Mark{small, d0}.strict())
            fail("recovered pair is not strict");
        q -= d_bullet(big, k1) * d_bullet(small, d0);
        StrictPair p{{big, k1}, {small, d0}};
        if (big == small && p.first.d > p.second.d)
            std::swap(p.first, p.second);
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ZPoly mdeg_n1_from_d(const ZPoly& d, long N, int n, const std::vector<int>& weights)
{
    ZPoly out;
    if (n < 2)
        return out;
    for (const auto& [mono, c] : d.terms()) {
        if (mono.z_degree() != n - 1 || mono.exponent({1, 0}) != 0 || mono.y_exp() != 0)
            continue;
        if (c <= 0)
            fail("negative coefficient in the degree-(n-1) layer of D");
        Multiset tau;
        for (Mark mk : mono.marks())
            tau.push_back(mk.w);
        bool found = false;
        for (std::size_t i = 0; i < tau.size() && !found; ++i) {
            if (i > 0 && tau[i] == tau[i - 1])
                continue;
            Multiset others = tau;
            others.erase(others.begin() + static_cast<long>(i));
            auto pair = remove_all(weights, others);
            if (!pair || pair->size() != 2 || (*pair)[0] + (*pair)[1] != tau[i])
                continue;
            auto rest = remove_all(weights, *pair);
            out.add(ZMonomial::z(tau[i], 1) * undotted(*rest), c);
            found = true;
        }
        if (!found)
            fail("no merged pair explains a degree-(n-1) term of D");
    }
    (void)N;
    return out;
}

TreeStats stats_from_d(const ZPoly& d)
{
    DTopTerms top = top_and_degree_one_from_d(d);
    TreeStats s;
    s.N = top.N;
    s.n = top.n;
    s.weights = sorted_desc(top.weights);
    if (s.n <= 2) {
        s.leaf_weights = s.weights;
    } else {
        auto pairs = strict_pairs_from_d2(d_layer(d, 2), s.N, s.n);
        if (static_cast<int>(pairs.size()) != s.n - 1)
            fail("number of strict pairs differs from the number of edges");
        for (const auto& p : pairs) {
            if (p.second.d == 0)
                s.leaf_weights.push_back(p.second.w);
            else if (p.first.d == 0)
                s.leaf_weights.push_back(p.first.w);
        }
        s.leaf_weights = sorted_desc(s.leaf_weights);
    }
    if (!remove_all(s.weights, s.leaf_weights))
        fail("leaf weights are not a sub-multiset of the vertex weights");
    s.shape = shape_for(s.n, s.leaf_weights.size());
    return s;
}

MarkedGraph star_from_d(const ZPoly& d)
{
    TreeStats s = stats_from_d(d);
    if (s.shape != Shape::star)
        fail("D is not the D-polynomial of a star");
    if (s.n == 1)
        return weighted_graph({static_cast<int>(s.N)}, {});
    if (s.n == 2)
        return weighted_path(s.weights);
    long center = s.N - std::accumulate(s.leaf_weights.begin(), s.leaf_weights.end(), 0L);
    return weighted_star(static_cast<int>(center), s.leaf_weights);
}

LeafCounts twostar_counts_from_d(const ZPoly& d)
{
    TreeStats s = stats_from_d(d);
    if (s.shape != Shape::two_star)
        fail("D is not the D-polynomial of a 2-star");
    LeafCounts c;
    std::tie(c.center[0], c.center[1]) = centers_of(s);
    group_leaves(s.leaf_weights, c);
    if (c.center[0] != c.center[1]) {
        ZPoly layer = mdeg_n1_from_d(d, s.N, s.n, s.weights);
        c = solve_distinct(c, [&](int a, int b) { return alpha(layer, s.weights, a, b); });
        require_nonempty_stars(c);
        return c;
    }

    int u = c.center[0];
    auto mu_of = [&](int w) -> long {
        for (std::size_t j = 0; j < c.leaf_weight.size(); ++j)
            if (c.leaf_weight[j] == w)
                return c.mu[j];
        return 0;
    };
    // [z_{W(x,y)}] D: edge pairs whose contraction merges {u,x} and {u,y}.
    auto coeff_xy = [&](int x, int y) -> BigInt {
        auto rest = remove_all(s.weights, {u, u, x, y});
        if (!rest)
            return 0;
        Multiset tau = *rest;
        tau.push_back(u + x);
        tau.push_back(u + y);
        return d.coeff(undotted(tau));
    };
    // The coefficient also counts two-edge sets sharing a vertex when one of
    // x, y equals u plus the other; subtract those to get β(u, x, y).
    std::function<BigInt(int, int)> beta_xy = [&](int x, int y) -> BigInt {
        auto same_center_pairs = [&](int t) -> BigInt {
            long mu_u = mu_of(u);
            if (t != u)
                return BigInt(mu_u) * mu_of(t) - beta_xy(u, t);
            return BigInt(mu_u) * (mu_u - 1) / 2 - beta_xy(u, u);
        };
        BigInt k = 0;
        if (x != y && y == u + x)
            k = mu_of(x) + same_center_pairs(x);
        else if (x != y && x == u + y)
            k = mu_of(y) + same_center_pairs(y);
        return coeff_xy(x, y) - k;
    };
    c = solve_equal(c, [&](std::size_t j1, std::size_t j2) { return beta_xy(c.leaf_weight[j1], c.leaf_weight[j2]); });
    require_nonempty_stars(c);
    return c;
}

MarkedGraph twostar_from_d(const ZPoly& d) { return two_star_from_counts(twostar_counts_from_d(d)); }

MarkedGraph tree_from_d(const ZPoly& d)
{
    switch (stats_from_d(d).shape) {
    case Shape::star:
        return star_from_d(d);
    case Shape::two_star:
        return twostar_from_d(d);
    default:
        fail("only strictly weighted stars and 2-stars can be reconstructed");
    }
}

MarkedGraph tree_from_csf_star(const SymFn& x)
{
    if (x.is_zero())
        fail("zero symmetric function");
    if (x.basis() != Basis::st)
        fail("expected a star-basis expansion");
    if (x == SymFn::term(Basis::st, {1}))
        return unweighted_graph(1, {});
    ZPoly d = star_to_zpoly(x);
    MarkedGraph core_tree;
    try {
        core_tree = tree_from_d(d);
    } catch (const ReconstructionError& e) {
        fail(std::string("not the star expansion of a proper tree of diameter at most 5: ") + e.what());
    }
    return uncore(core_tree);
}

} // namespace gpoly
