#include "gpoly/random_graphs.hpp"

#include "gpoly/errors.hpp"

#include <set>

namespace gpoly {

Mark random_mark(Rng& rng, int max_weight, bool strict)
{
    int lo = strict ? 2 : 1;
    if (max_weight < lo)
        throw InvalidInput("max_weight too small for the requested marks");
    int w = rng.between(lo, max_weight);
    int d = rng.between(0, strict ? w - 2 : w - 1);
    return {w, d};
}

MarkedGraph random_multigraph(Rng& rng, int n, int m, int max_weight, bool simple)
{
    if (n <= 0)
        throw InvalidInput("random_multigraph needs n > 0");
    MarkedGraph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(random_mark(rng, max_weight));
    std::set<std::pair<int, int>> used;
    for (int tries = 0; static_cast<int>(g.size()) < m && tries < 50 * (m + 1); ++tries) {
        int a = rng.between(0, n - 1), b = rng.between(0, n - 1);
        if (a > b)
            std::swap(a, b);
        if (simple && (a == b || used.count({a, b})))
            continue;
        used.insert({a, b});
        g.add_edge(a, b);
    }
    return g;
}

MarkedGraph random_simple_graph(Rng& rng, int n, int edge_percent)
{
    MarkedGraph g = unweighted_graph(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance(edge_percent, 100))
                g.add_edge(a, b);
    return g;
}

MarkedGraph tree_from_pruefer(const std::vector<int>& seq)
{
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n)
            throw InvalidInput("Prüfer entry out of range");
        ++deg[x];
    }
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        int leaf = 0;
        while (deg[leaf] != 1)
            ++leaf;
        edges.push_back({leaf, x});
        --deg[leaf];
        --deg[x];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
            if (a < 0)
                a = v;
            else
                edges.push_back({a, v});
        }
    return unweighted_graph(n, edges);
}

MarkedGraph random_tree(Rng& rng, int n)
{
    if (n <= 0)
        throw InvalidInput("random_tree needs n > 0");
    if (n == 1)
        return unweighted_graph(1, {});
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq)
        x = rng.between(0, n - 1);
    return tree_from_pruefer(seq);
}

MarkedGraph random_forest(Rng& rng, int n)
{
    MarkedGraph g;
    int placed = 0;
    while (placed < n) {
        int k = rng.between(1, n - placed);
        MarkedGraph t = random_tree(rng, k);
        for (int v = 0; v < k; ++v)
            g.add_vertex(placed + v, {});
        for (const Edge& e : t.edges())
            g.add_edge(e.u + placed, e.v + placed);
        placed += k;
    }
    return g;
}

MarkedGraph with_random_marks(Rng& rng, MarkedGraph g, int max_weight, bool strict)
{
    for (int v : g.vertex_ids())
        g.set_mark(v, random_mark(rng, max_weight, strict));
    return g;
}

MarkedGraph with_random_weights(Rng& rng, MarkedGraph g, int min_weight, int max_weight)
{
    for (int v : g.vertex_ids())
        g.set_mark(v, make_mark(rng.between(min_weight, max_weight)));
    return g;
}

} // namespace gpoly
