#include "gpoly/canonical.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <functional>

namespace gpoly {

namespace {

using Adj = std::vector<std::vector<int>>;

std::string encode(const Adj& adj, const std::vector<Mark>& marks, int v, int parent)
{
    std::vector<std::string> kids;
    for (int c : adj[v])
        if (c != parent)
            kids.push_back(encode(adj, marks, c, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(marks[v].w) + "," + std::to_string(marks[v].d);
    for (const auto& k : kids)
        s += k;
    return s + ")";
}

std::vector<int> centroids(const Adj& adj, const std::vector<int>& comp)
{
    int total = static_cast<int>(comp.size());
    std::vector<int> size(adj.size(), 0), worst(adj.size(), 0);
    std::function<void(int, int)> dfs = [&](int v, int p) {
        size[v] = 1;
        for (int c : adj[v])
            if (c != p) {
                dfs(c, v);
                size[v] += size[c];
                worst[v] = std::max(worst[v], size[c]);
            }
        worst[v] = std::max(worst[v], total - size[v]);
    };
    dfs(comp.front(), -1);
    int best = total;
    for (int v : comp)
        best = std::min(best, worst[v]);
    std::vector<int> out;
    for (int v : comp)
        if (worst[v] == best)
            out.push_back(v);
    return out;
}

} // namespace

std::string canonical_form(const MarkedGraph& forest)
{
    if (!forest.is_forest())
        throw InvalidInput("canonical_form needs a forest");
    std::size_t n = forest.order();
    Adj adj(n);
    std::vector<Mark> marks = forest.marks();
    for (const Edge& e : forest.edges()) {
        int a = static_cast<int>(forest.index_of(e.u)), b = static_cast<int>(forest.index_of(e.v));
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::string> parts;
    for (const auto& ids : forest.components()) {
        std::vector<int> comp;
        for (int id : ids)
            comp.push_back(static_cast<int>(forest.index_of(id)));
        std::string best;
        for (int c : centroids(adj, comp)) {
            std::string s = encode(adj, marks, c, -1);
            if (best.empty() || s < best)
                best = std::move(s);
        }
        parts.push_back(std::move(best));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts)
        out += p;
    return out;
}

bool mark_isomorphic(const MarkedGraph& a, const MarkedGraph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace gpoly
