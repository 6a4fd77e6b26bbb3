#include "gpoly/csf.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <functional>

namespace gpoly {

namespace {

// Union-find with undo, for include/exclude sweeps over edge subsets.
struct RollbackUF {
    std::vector<int> parent, weight;
    std::vector<std::pair<int, int>> history; // (absorbed root, surviving root)

    explicit RollbackUF(const std::vector<int>& w) : parent(w.size()), weight(w)
    {
        for (std::size_t i = 0; i < w.size(); ++i)
            parent[i] = static_cast<int>(i);
    }
    int find(int x) const
    {
        while (parent[x] != x)
            x = parent[x];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            history.emplace_back(-1, -1);
            return;
        }
        if (a > b)
            std::swap(a, b);
        parent[b] = a;
        weight[a] += weight[b];
        history.emplace_back(b, a);
    }
    void undo()
    {
        auto [b, a] = history.back();
        history.pop_back();
        if (b < 0)
            return;
        parent[b] = b;
        weight[a] -= weight[b];
    }
};

} // namespace

SymFn csf_power(const MarkedGraph& g, int max_edges)
{
    if (g.has_loops())
        return SymFn(Basis::p);
    if (static_cast<int>(g.size()) > max_edges)
        throw BudgetExceeded("csf_power: " + std::to_string(g.size()) + " edges exceeds budget " +
                             std::to_string(max_edges));
    std::vector<int> w;
    for (const Vertex& v : g.vertices())
        w.push_back(v.mark.w);
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : g.edges())
        ends.emplace_back(static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v)));

    RollbackUF uf(w);
    std::unordered_map<Partition, long long, PartitionHash> acc;
    Partition lam;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sign) {
        if (i == ends.size()) {
            lam.clear();
            for (std::size_t v = 0; v < w.size(); ++v)
                if (uf.parent[v] == static_cast<int>(v))
                    lam.push_back(uf.weight[v]);
            std::sort(lam.begin(), lam.end(), std::greater<>());
            acc[lam] += sign;
            return;
        }
        rec(i + 1, sign);
        uf.unite(ends[i].first, ends[i].second);
        rec(i + 1, -sign);
        uf.undo();
    };
    rec(0, 1);
    SymFn out(Basis::p);
    for (const auto& [l, c] : acc)
        out.add(l, c);
    return out;
}

namespace {

BigInt chromatic_simple(const MarkedGraph& g, long k)
{
    if (g.size() == 0) {
        BigInt r = 1;
        for (std::size_t i = 0; i < g.order(); ++i)
            r *= k;
        return r;
    }
    int e = g.edges().back().id;
    return chromatic_simple(delete_edge(g, e), k) - chromatic_simple(simplify(contract_edge(g, e)), k);
}

} // namespace

BigInt chromatic_poly_eval(const MarkedGraph& g, long k)
{
    if (k < 0)
        throw InvalidInput("colour count must be non-negative");
    if (g.has_loops())
        return 0;
    return chromatic_simple(simplify(g), k);
}

MonomialTable weighted_csf(const MarkedGraph& g, int nvars, long max_colourings)
{
    if (nvars <= 0)
        throw InvalidInput("need at least one variable");
    long total = 1;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (total > max_colourings / nvars)
            throw BudgetExceeded("weighted_csf: too many colourings");
        total *= nvars;
    }
    MonomialTable out;
    if (g.has_loops())
        return out;
    std::size_t n = g.order();
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (const Edge& e : g.edges())
        ends.emplace_back(g.index_of(e.u), g.index_of(e.v));
    std::vector<int> colour(n, 0);
    for (;;) {
        bool proper = std::all_of(ends.begin(), ends.end(),
                                  [&](const auto& p) { return colour[p.first] != colour[p.second]; });
        if (proper) {
            std::vector<int> expo(static_cast<std::size_t>(nvars), 0);
            for (std::size_t v = 0; v < n; ++v)
                expo[static_cast<std::size_t>(colour[v])] += g.vertices()[v].mark.w;
            out[expo] += 1;
        }
        std::size_t i = 0;
        while (i < n && ++colour[i] == nvars)
            colour[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

MonomialTable p_to_monomials(const SymFn& f, int nvars)
{
    if (!f.is_zero() && f.basis() != Basis::p)
        throw InvalidInput("p_to_monomials needs a p-expansion");
    MonomialTable out;
    for (const auto& [lam, c] : f.terms()) {
        MonomialTable prod{{std::vector<int>(static_cast<std::size_t>(nvars), 0), c}};
        for (int part : lam) {
            MonomialTable next;
            for (const auto& [expo, v] : prod)
                for (int x = 0; x < nvars; ++x) {
                    auto e = expo;
                    e[static_cast<std::size_t>(x)] += part;
                    next[e] += v;
                }
            prod = std::move(next);
        }
        for (const auto& [expo, v] : prod)
            out[expo] += v;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

BigInt principal_specialization(const SymFn& f, long k)
{
    if (!f.is_zero() && f.basis() != Basis::p)
        throw InvalidInput("principal_specialization needs a p-expansion");
    BigInt total = 0;
    for (const auto& [lam, c] : f.terms())
        total += c * ipow(BigInt(k), static_cast<unsigned>(lam.size()));
    return total;
}

} // namespace gpoly
