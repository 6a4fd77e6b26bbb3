#include "gpoly/enumerate.hpp"

#include "gpoly/canonical.hpp"
#include "gpoly/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gpoly {

namespace {

using Layout = std::vector<int>; // level sequence, root at level 0

void check_cap(int n, int cap)
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
    if (n > cap)
        throw InvalidInput("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

bool next_rooted_tree(Layout& l, int p = -1)
{
    if (p < 0) {
        p = static_cast<int>(l.size()) - 1;
        while (p > 0 && l[p] == 1)
            --p;
    }
    if (p == 0)
        return false;
    int q = p - 1;
    while (l[q] != l[p] - 1)
        --q;
    for (std::size_t i = p; i < l.size(); ++i)
        l[i] = l[i - p + q];
    return true;
}

// Splits off the first subtree of the root.
std::pair<Layout, Layout> split_tree(const Layout& l)
{
    std::size_t m = l.size();
    bool seen = false;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] == 1) {
            if (seen) {
                m = i;
                break;
            }
            seen = true;
        }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i)
        left.push_back(l[i] - 1);
    for (std::size_t i = m; i < l.size(); ++i)
        rest.push_back(l[i]);
    return {left, rest};
}

// Advances to the next layout that is centrally rooted; false when exhausted.
bool next_tree(Layout& l)
{
    auto [left, rest] = split_tree(l);
    int lh = *std::max_element(left.begin(), left.end());
    int rh = *std::max_element(rest.begin(), rest.end());
    bool valid = rh >= lh;
    if (valid && rh == lh) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid)
        return true;
    int p = static_cast<int>(left.size());
    Layout next = l;
    if (!next_rooted_tree(next, p))
        return false;
    if (l[p] > 2) {
        auto [nl, nr] = split_tree(next);
        int h = *std::max_element(nl.begin(), nl.end());
        for (int k = 0; k < h + 1; ++k)
            next[next.size() - (h + 1) + k] = k + 1;
    }
    l = std::move(next);
    return true;
}

MarkedGraph layout_to_tree(const Layout& l)
{
    MarkedGraph g;
    for (std::size_t i = 0; i < l.size(); ++i)
        g.add_vertex();
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(l.size()); ++i) {
        if (!stack.empty()) {
            while (l[stack.back()] >= l[i])
                stack.pop_back();
            g.add_edge(stack.back(), i);
        }
        stack.push_back(i);
    }
    return g;
}

// Non-increasing sequences of parts >= 2 summing to total.
void multisets(int total, int largest, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, largest); p >= 2; --p) {
        cur.push_back(p);
        multisets(total - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> strict_multisets(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (total >= 0)
        multisets(total, total, cur, out);
    return out;
}

std::vector<MarkedGraph> dedupe(const std::vector<MarkedGraph>& gs)
{
    std::set<std::string> seen;
    std::vector<MarkedGraph> out;
    for (const auto& g : gs)
        if (seen.insert(canonical_form(g)).second)
            out.push_back(g);
    return out;
}

} // namespace

void for_each_free_tree(int n, const std::function<void(const MarkedGraph&)>& visit, int cap)
{
    check_cap(n, cap);
    if (n == 0)
        return;
    if (n == 1) {
        visit(unweighted_graph(1, {}));
        return;
    }
    Layout l;
    for (int i = 0; i <= n / 2; ++i)
        l.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i)
        l.push_back(i);
    while (next_tree(l)) {
        visit(layout_to_tree(l));
        if (!next_rooted_tree(l))
            break;
    }
}

std::vector<MarkedGraph> enumerate_free_trees(int n, int cap)
{
    std::vector<MarkedGraph> out;
    for_each_free_tree(n, [&](const MarkedGraph& t) { out.push_back(t); }, cap);
    return out;
}

std::vector<MarkedGraph> enumerate_weighted_stars(int N)
{
    std::vector<MarkedGraph> out;
    for (int c = 2; c <= N; ++c)
        for (const auto& leaves : strict_multisets(N - c))
            out.push_back(weighted_star(c, leaves));
    return out;
}

std::vector<MarkedGraph> enumerate_weighted_two_stars(int N)
{
    std::vector<MarkedGraph> out;
    for (int c0 = 2; c0 <= N; ++c0)
        for (int c1 = 2; c0 + c1 <= N; ++c1)
            for (int s0 = 2; c0 + c1 + s0 + 2 <= N; ++s0)
                for (const auto& l0 : strict_multisets(s0))
                    for (const auto& l1 : strict_multisets(N - c0 - c1 - s0))
                        if (!l1.empty())
                            out.push_back(weighted_two_star(c0, l0, c1, l1));
    return dedupe(out);
}

std::vector<MarkedGraph> enumerate_proper_diam5(int n, int cap)
{
    check_cap(n, cap);
    if (n == 0)
        return {};
    if (n == 1)
        return {unweighted_graph(1, {})};
    std::vector<MarkedGraph> out;
    for (const auto& s : enumerate_weighted_stars(n))
        out.push_back(uncore(s));
    for (const auto& s : enumerate_weighted_two_stars(n))
        out.push_back(uncore(s));
    return dedupe(out);
}

bool is_proper_tree(const MarkedGraph& t)
{
    if (!t.is_forest() || !t.is_connected())
        return false;
    for (const Vertex& v : t.vertices()) {
        if (t.degree(v.id) <= 1)
            continue;
        bool has_leaf = false;
        for (int e : t.incident_edges(v.id))
            has_leaf = has_leaf || t.degree(t.edge(e).other(v.id)) == 1;
        if (!has_leaf)
            return false;
    }
    return true;
}

void for_each_weighted_tree(int n, int max_weight, const std::function<void(const MarkedGraph&)>& visit)
{
    for_each_free_tree(n, [&](const MarkedGraph& shape) {
        std::vector<int> w(static_cast<std::size_t>(n), 1);
        while (true) {
            MarkedGraph g = shape;
            for (int v = 0; v < n; ++v)
                g.set_mark(v, make_mark(w[v]));
            visit(g);
            int i = 0;
            while (i < n && w[i] == max_weight)
                w[i++] = 1;
            if (i == n)
                break;
            ++w[i];
        }
    });
}

std::uint64_t graph_certificate(const MarkedGraph& g)
{
    int n = static_cast<int>(g.order());
    if (n > 8 || !g.is_simple())
        throw InvalidInput("graph_certificate needs a simple graph on at most 8 vertices");
    std::vector<unsigned> adj(n, 0);
    for (const Edge& e : g.edges()) {
        int a = static_cast<int>(g.index_of(e.u)), b = static_cast<int>(g.index_of(e.v));
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v)
        colour[v] = __builtin_popcount(adj[v]);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (adj[v] >> u & 1)
                    nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        bool same = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
        colour = next;
        if (same)
            break;
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::vector<std::pair<int, int>> cells; // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]])
            ++j;
        cells.push_back({i, j});
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
        if (c == cells.size()) {
            std::uint64_t code = 0;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (adj[order[i]] >> order[j] & 1)
                        code |= std::uint64_t{1} << bit;
            best = std::min(best, code);
            return;
        }
        auto [b, e] = cells[c];
        std::sort(order.begin() + b, order.begin() + e);
        do
            walk(c + 1);
        while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    walk(0);
    return best | static_cast<std::uint64_t>(n) << 32;
}

std::vector<MarkedGraph> enumerate_connected_graphs(int n)
{
    if (n < 0 || n > 7)
        throw InvalidInput("enumerate_connected_graphs supports 0 <= n <= 7");
    if (n == 0)
        return {};
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    auto build = [&](std::uint32_t mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1)
                es.push_back(slots[k]);
        return unweighted_graph(n, es);
    };
    std::vector<std::uint32_t> layer{0};
    std::vector<MarkedGraph> out;
    for (std::size_t m = 0; m <= slots.size(); ++m) {
        for (std::uint32_t mask : layer) {
            MarkedGraph g = build(mask);
            if (g.is_connected())
                out.push_back(g);
        }
        std::set<std::uint64_t> seen;
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : layer)
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (!(mask >> k & 1)) {
                    std::uint32_t grown = mask | 1u << k;
                    if (seen.insert(graph_certificate(build(grown))).second)
                        next.push_back(grown);
                }
        layer = std::move(next);
    }
    return out;
}

} // namespace gpoly
