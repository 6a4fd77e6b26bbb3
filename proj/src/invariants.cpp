#include "gpoly/invariants.hpp"

#include "gpoly/canonical.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/substitutions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace gpoly {

namespace {

ZPoly vertex_product(const MarkedGraph& g)
{
    std::vector<Mark> ms = g.marks();
    return ZPoly::monomial(ZMonomial::from_marks(ms));
}

class DcEngine {
public:
    explicit DcEngine(const std::vector<int>& order) : order_(order) {}

    ZPoly run(const MarkedGraph& g)
    {
        if (g.size() == 0)
            return vertex_product(g);
        std::string key;
        bool forest = g.is_forest();
        if (forest) {
            key = canonical_form(g);
            auto it = forest_cache_.find(key);
            if (it != forest_cache_.end())
                return it->second;
        }
        int e = pick(g);
        ZPoly out;
        if (g.edge(e).is_loop())
            out = ZPoly::y() * run(delete_edge(g, e));
        else
            out = run(delete_edge(g, e)) + run(contract_edge(g, e));
        if (forest)
            forest_cache_.emplace(std::move(key), out);
        return out;
    }

private:
    int pick(const MarkedGraph& g) const
    {
        for (int id : order_)
            if (g.has_edge(id))
                return id;
        return g.edges().front().id;
    }

    std::vector<int> order_;
    std::unordered_map<std::string, ZPoly> forest_cache_;
};

// (y-1)^k
const ZPoly& y_minus_one_power(std::vector<ZPoly>& cache, int k)
{
    while (static_cast<int>(cache.size()) <= k) {
        if (cache.empty())
            cache.emplace_back(1);
        else
            cache.push_back(cache.back() * (ZPoly::y() - ZPoly(1)));
    }
    return cache[static_cast<std::size_t>(k)];
}

} // namespace

ZPoly m_poly_dc(const MarkedGraph& g, const std::vector<int>& edge_order)
{
    DcEngine engine(edge_order);
    return engine.run(g);
}

ZPoly m_poly_states(const MarkedGraph& g, int max_edges)
{
    if (static_cast<int>(g.size()) > max_edges)
        throw BudgetExceeded("m_poly_states: " + std::to_string(g.size()) + " edges exceeds budget " +
                             std::to_string(max_edges));
    std::size_t n = g.order();
    std::vector<int> parent(n), wsum(n), dsum(n), cnt(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        parent[i] = static_cast<int>(i);
        wsum[i] = g.vertices()[i].mark.w;
        dsum[i] = g.vertices()[i].mark.d;
    }
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : g.edges())
        ends.emplace_back(static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v)));
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };

    // key: marks with the nullity stored as the y-exponent for now
    std::unordered_map<ZMonomial, long long, ZMonomialHash> acc;
    std::vector<Mark> parts;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int nullity) {
        if (i == ends.size()) {
            parts.clear();
            for (std::size_t v = 0; v < n; ++v)
                if (parent[v] == static_cast<int>(v))
                    parts.push_back({wsum[v], dsum[v] + cnt[v] - 1});
            acc[ZMonomial::from_marks(parts, nullity)] += 1;
            return;
        }
        rec(i + 1, nullity);
        int a = find(ends[i].first), b = find(ends[i].second);
        if (a == b) {
            rec(i + 1, nullity + 1);
            return;
        }
        if (a > b)
            std::swap(a, b);
        parent[b] = a;
        wsum[a] += wsum[b];
        dsum[a] += dsum[b];
        cnt[a] += cnt[b];
        rec(i + 1, nullity);
        parent[b] = b;
        wsum[a] -= wsum[b];
        dsum[a] -= dsum[b];
        cnt[a] -= cnt[b];
    };
    rec(0, 0);

    std::vector<ZPoly> ypow;
    ZPoly out;
    for (const auto& [key, count] : acc) {
        ZMonomial zpart = ZMonomial::from_marks(key.marks());
        for (const auto& [ym, c] : y_minus_one_power(ypow, key.y_exp()).terms())
            out.add(zpart * ym, c * count);
    }
    return out;
}

ZPoly m_poly_bond(const MarkedGraph& g, int max_vertices)
{
    int n = static_cast<int>(g.order());
    if (n > max_vertices)
        throw BudgetExceeded("m_poly_bond: " + std::to_string(n) + " vertices exceeds budget " +
                             std::to_string(max_vertices));
    if (n == 0)
        return ZPoly(1);
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : g.edges())
        ends.emplace_back(static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v)));

    auto induced = [&](unsigned mask) {
        std::vector<std::pair<int, int>> out;
        for (auto [a, b] : ends)
            if ((mask >> a & 1u) && (mask >> b & 1u))
                out.push_back({a, b});
        return out;
    };
    auto connected = [&](unsigned mask, const std::vector<std::pair<int, int>>& es) {
        unsigned seen = mask & (~mask + 1u), grown = 0;
        while (seen != grown) {
            grown = seen;
            for (auto [a, b] : es) {
                if (seen >> a & 1u)
                    seen |= 1u << b;
                if (seen >> b & 1u)
                    seen |= 1u << a;
            }
        }
        return seen == mask;
    };

    std::map<unsigned, ZPoly> tutte; // T_{G[B]}(1,y); zero when G[B] is disconnected
    std::vector<ZPoly> ypow;
    auto block_factor = [&](unsigned mask) -> const ZPoly& {
        auto it = tutte.find(mask);
        if (it != tutte.end())
            return it->second;
        auto es = induced(mask);
        ZPoly t;
        if (connected(mask, es)) {
            int size = __builtin_popcount(mask);
            std::size_t m = es.size();
            for (unsigned long sub = 0; sub < (1ul << m); ++sub) {
                std::vector<std::pair<int, int>> chosen;
                for (std::size_t k = 0; k < m; ++k)
                    if (sub >> k & 1ul)
                        chosen.push_back(es[k]);
                if (!connected(mask, chosen))
                    continue;
                int nullity = static_cast<int>(chosen.size()) - (size - 1);
                t += y_minus_one_power(ypow, nullity);
            }
        }
        return tutte.emplace(mask, std::move(t)).first->second;
    };

    std::vector<Mark> marks = g.marks();
    ZPoly out;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int v, int nblocks) {
        if (v == n) {
            ZPoly term(1);
            std::vector<Mark> parts;
            for (int b = 0; b < nblocks; ++b) {
                unsigned mask = 0;
                for (int x = 0; x < n; ++x)
                    if (block[static_cast<std::size_t>(x)] == b)
                        mask |= 1u << x;
                const ZPoly& t = block_factor(mask);
                if (t.is_zero())
                    return;
                Mark m{0, -1};
                for (int x = 0; x < n; ++x)
                    if (mask >> x & 1u)
                        m = {m.w + marks[static_cast<std::size_t>(x)].w, m.d + marks[static_cast<std::size_t>(x)].d + 1};
                parts.push_back(m);
                term = term * t;
            }
            out += term * ZPoly::monomial(ZMonomial::from_marks(parts));
            return;
        }
        for (int b = 0; b <= nblocks; ++b) {
            block[static_cast<std::size_t>(v)] = b;
            rec(v + 1, std::max(nblocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

ZPoly m_poly(const MarkedGraph& g)
{
    if (static_cast<int>(g.size()) <= kSubsetBudget)
        return m_poly_states(g);
    return m_poly_dc(g);
}

ZPoly w_poly(const MarkedGraph& g)
{
    if (!g.all_undotted())
        throw InvalidInput("w_poly needs a weighted graph (all dots zero)");
    return forget_dots(m_poly(g));
}

ZPoly d_poly(const MarkedGraph& g) { return undot(m_poly(core(g))); }

ZPoly w_from_d(const MarkedGraph& g)
{
    for (const Vertex& v : g.vertices())
        if (v.mark.d != 0 || v.mark.w < 2)
            throw InvalidInput("w_from_d needs a strictly weighted graph");
    return drop_z1(d_poly(g));
}

SymFn csf_from_w(const MarkedGraph& g)
{
    ZPoly w = w_poly(g).at_y_zero();
    SymFn out(Basis::p);
    bool odd_order = g.order() % 2 == 1;
    for (const auto& [m, c] : w.terms()) {
        Partition lam;
        for (const auto& f : m.factors())
            lam.insert(lam.end(), static_cast<std::size_t>(f.e), f.w);
        bool negate = (lam.size() % 2 == 1) != odd_order;
        out.add(lam, negate ? BigInt(-c) : c);
    }
    return out;
}

SymFn csf_from_d(const MarkedGraph& g) { return subst_star(d_poly(g).at_y_zero()); }

} // namespace gpoly
