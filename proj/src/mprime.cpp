#include "gpoly/mprime.hpp"

#include "gpoly/errors.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/substitutions.hpp"

#include <algorithm>

namespace gpoly {

MarkOrder lex_order()
{
    return {"lex", [](Mark a, Mark b) { return a < b; }};
}

MarkOrder hashed_order(std::uint64_t seed)
{
    auto rank = [seed](Mark m) {
        std::uint64_t x = seed ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(m.w)) << 32) ^
                          static_cast<std::uint32_t>(m.d);
        // splitmix64 finaliser
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    return {"hashed:" + std::to_string(seed), [rank](Mark a, Mark b) {
                auto ra = rank(a), rb = rank(b);
                if (ra != rb)
                    return ra < rb;
                return a < b;
            }};
}

namespace {

MarkedGraph induced(const MarkedGraph& g, const std::vector<int>& ids)
{
    MarkedGraph h;
    for (int id : ids)
        h.add_vertex(id, g.mark(id));
    for (const Edge& e : g.edges())
        if (std::binary_search(ids.begin(), ids.end(), e.u))
            h.add_edge(e.id, e.u, e.v);
    return h;
}

// Contract every edge of a1 and delete every edge of a2.
MarkedGraph contract_delete(MarkedGraph t, const std::vector<int>& a1, const std::vector<int>& a2)
{
    for (int e : a2)
        t = delete_edge(t, e);
    for (int e : a1)
        t = contract_edge(t, e);
    return t;
}

ZPoly split_sum(const MarkedGraph& t, const std::vector<int>& pendant, const std::function<ZPoly(const MarkedGraph&)>& f)
{
    ZPoly out;
    std::size_t k = pendant.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<int> a1, a2;
        for (std::size_t i = 0; i < k; ++i)
            (mask >> i & 1ul ? a1 : a2).push_back(pendant[i]);
        out += f(contract_delete(t, a1, a2));
    }
    return out;
}

ZPoly m_prime_rec(const MarkedGraph& t, const MarkOrder& order)
{
    if (t.order() == 1)
        return ZPoly::monomial(ZMonomial::z(t.vertices()[0].mark.w, t.vertices()[0].mark.d));
    auto comps = t.components();
    if (comps.size() > 1) {
        ZPoly out(1);
        for (const auto& ids : comps)
            out *= m_prime_rec(induced(t, ids), order);
        return out;
    }
    std::vector<int> deg = t.degrees();
    for (std::size_t i = 0; i < t.order(); ++i)
        if (deg[i] == 1 && t.vertices()[i].mark.is_unit())
            return m_prime_rec(core(t), order);

    std::vector<int> pendant;
    std::vector<int> leaves;
    for (const Edge& e : t.edges()) {
        bool lu = deg[t.index_of(e.u)] == 1, lv = deg[t.index_of(e.v)] == 1;
        if (lu || lv)
            pendant.push_back(e.id);
    }
    bool star = t.order() >= 3 && pendant.size() == t.size();
    if (star) {
        int center = -1;
        for (std::size_t i = 0; i < t.order(); ++i)
            if (deg[i] > 1)
                center = t.vertices()[i].id;
        if (t.mark(center).is_unit()) {
            int best_edge = -1;
            Mark best{};
            int best_leaf = -1;
            for (int id : pendant) {
                int leaf = t.edge(id).other(center);
                Mark m = t.mark(leaf);
                bool better = best_edge < 0 || order.less(best, m) ||
                              (!order.less(m, best) && !order.less(best, m) && leaf < best_leaf);
                if (better) {
                    best_edge = id;
                    best = m;
                    best_leaf = leaf;
                }
            }
            pendant.erase(std::find(pendant.begin(), pendant.end(), best_edge));
        }
    }
    return split_sum(t, pendant, [&](const MarkedGraph& h) { return m_prime_rec(h, order); });
}

} // namespace

ZPoly m_prime(const MarkedGraph& forest, const MarkOrder& order)
{
    if (!forest.is_forest())
        throw InvalidInput("m_prime needs a forest");
    if (forest.order() == 0)
        return ZPoly(1);
    return m_prime_rec(forest, order);
}

bool m_prime_undot_check(const MarkedGraph& forest, const MarkOrder& order)
{
    return undot(m_prime(forest, order)) == d_poly(forest);
}

ZPoly partial_states(const MarkedGraph& g, const std::vector<int>& b)
{
    return split_sum(g, b, [](const MarkedGraph& h) { return m_poly(h); });
}

} // namespace gpoly
