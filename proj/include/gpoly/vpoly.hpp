#pragma once

#include "gpoly/bigint.hpp"
#include "gpoly/csf.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gpoly {

// A commutative semigroup (S, op) with a printable key per element.
template <class S>
struct SemigroupSpec {
    std::function<S(const S&, const S&)> op;
    std::function<std::string(const S&)> key;
};

// Marks under the dot-sum; keys are "w,d".
SemigroupSpec<Mark> mark_semigroup();
// Positive integers under +.
SemigroupSpec<int> weight_semigroup();

// Edge id -> exact γ_e.
using EdgeWeights = std::map<int, Rational>;

// Monomial Π z_s · Π_{e∈A} γ_e: sorted element keys and sorted edge ids.
struct VMonomial {
    std::vector<std::string> z;
    std::vector<int> gamma;

    auto operator<=>(const VMonomial&) const = default;
};

// V with the edge weights kept symbolic.
using VPoly = std::map<VMonomial, BigInt>;
// V after substituting numbers for the γ_e: z-key multiset -> coefficient.
using VValue = std::map<std::vector<std::string>, Rational>;

std::string to_string(const VPoly& v);
std::string to_string(const VValue& v);

VValue evaluate_gamma(const VPoly& v, const EdgeWeights& gamma);

// For the mark semigroup: substitute γ_e = y-1 and z_s = (y-1) z_s.  Equals
// (y-1)^{|V|} M(G).
ZPoly mark_vpoly_at_y(const VPoly& v);

namespace detail {

template <class S>
struct Labelled {
    std::vector<S> label; // by vertex slot; merged slots are dead
    std::vector<bool> alive;
    struct E {
        int id, a, b;
    };
    std::vector<E> edges;
};

template <class S>
Labelled<S> labelled(const MarkedGraph& g, const std::map<int, S>& labels)
{
    Labelled<S> out;
    for (const Vertex& v : g.vertices()) {
        auto it = labels.find(v.id);
        if (it == labels.end())
            throw InvalidInput("vertex " + std::to_string(v.id) + " has no semigroup label");
        out.label.push_back(it->second);
        out.alive.push_back(true);
    }
    for (const Edge& e : g.edges())
        out.edges.push_back({e.id, static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v))});
    return out;
}

template <class S>
std::vector<std::string> alive_keys(const Labelled<S>& h, const SemigroupSpec<S>& spec)
{
    std::vector<std::string> keys;
    for (std::size_t i = 0; i < h.label.size(); ++i)
        if (h.alive[i])
            keys.push_back(spec.key(h.label[i]));
    std::sort(keys.begin(), keys.end());
    return keys;
}

template <class S>
Labelled<S> contract(Labelled<S> h, std::size_t k, const SemigroupSpec<S>& spec)
{
    auto e = h.edges[k];
    h.edges.erase(h.edges.begin() + static_cast<long>(k));
    h.label[static_cast<std::size_t>(e.a)] = spec.op(h.label[static_cast<std::size_t>(e.a)], h.label[static_cast<std::size_t>(e.b)]);
    h.alive[static_cast<std::size_t>(e.b)] = false;
    for (auto& f : h.edges) {
        if (f.a == e.b)
            f.a = e.a;
        if (f.b == e.b)
            f.b = e.a;
    }
    return h;
}

template <class S, class Coef, class Emit>
void recurse(const Labelled<S>& h, const SemigroupSpec<S>& spec, const Coef& scale, std::vector<int>& gamma,
             const std::function<Coef(int)>& alpha, const std::function<Coef(int)>& beta, bool symbolic,
             const Emit& emit)
{
    if (h.edges.empty()) {
        emit(alive_keys(h, spec), gamma, scale);
        return;
    }
    auto e = h.edges.front();
    Labelled<S> del = h;
    del.edges.erase(del.edges.begin());
    if (e.a == e.b) {
        // loop: (α + β) times the deletion, or (γ + 1) symbolically
        if (symbolic) {
            recurse(del, spec, scale, gamma, alpha, beta, symbolic, emit);
            gamma.push_back(e.id);
            recurse(del, spec, scale, gamma, alpha, beta, symbolic, emit);
            gamma.pop_back();
        } else {
            recurse(del, spec, Coef(scale * (alpha(e.id) + beta(e.id))), gamma, alpha, beta, symbolic, emit);
        }
        return;
    }
    recurse(del, spec, Coef(scale * alpha(e.id)), gamma, alpha, beta, symbolic, emit);
    gamma.push_back(e.id);
    recurse(contract(h, 0, spec), spec, Coef(scale * beta(e.id)), gamma, alpha, beta, symbolic, emit);
    gamma.pop_back();
}

inline VMonomial make_vmonomial(std::vector<std::string> z, std::vector<int> gamma)
{
    std::sort(z.begin(), z.end());
    std::sort(gamma.begin(), gamma.end());
    return {std::move(z), std::move(gamma)};
}

} // namespace detail

// States model: Σ_{A⊆E} z_{λ(G,s,A)} Π_{e∈A} γ_e.
template <class S>
VPoly v_poly_states(const MarkedGraph& g, const std::map<int, S>& labels, const SemigroupSpec<S>& spec,
                    int max_edges = kSubsetBudget)
{
    if (static_cast<int>(g.size()) > max_edges)
        throw BudgetExceeded("v_poly: too many edges for the subset sum");
    auto base = detail::labelled(g, labels);
    std::size_t n = base.label.size(), m = base.edges.size();
    VPoly out;
    for (unsigned long sub = 0; sub < (1ul << m); ++sub) {
        std::vector<int> parent(n);
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        std::vector<int> gamma;
        for (std::size_t k = 0; k < m; ++k)
            if (sub >> k & 1ul) {
                gamma.push_back(base.edges[k].id);
                int a = find(base.edges[k].a), b = find(base.edges[k].b);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        std::map<int, S> comp;
        for (std::size_t v = 0; v < n; ++v) {
            int r = find(static_cast<int>(v));
            auto it = comp.find(r);
            if (it == comp.end())
                comp.emplace(r, base.label[v]);
            else
                it->second = spec.op(it->second, base.label[v]);
        }
        std::vector<std::string> keys;
        for (const auto& [r, s] : comp)
            keys.push_back(spec.key(s));
        out[detail::make_vmonomial(std::move(keys), std::move(gamma))] += 1;
    }
    return out;
}

// Rules (a)-(c) with γ kept symbolic: isolated vertices give Π z_s, a loop
// gives (γ_e + 1) V(G∖e), any other edge V(G∖e) + γ_e V(G/e).
template <class S>
VPoly v_poly_recursive(const MarkedGraph& g, const std::map<int, S>& labels, const SemigroupSpec<S>& spec)
{
    VPoly out;
    std::vector<int> gamma;
    std::function<BigInt(int)> one = [](int) { return BigInt(1); };
    detail::recurse<S, BigInt>(detail::labelled(g, labels), spec, BigInt(1), gamma, one, one, true,
                               [&](std::vector<std::string> keys, const std::vector<int>& gm, const BigInt& c) {
                                   out[detail::make_vmonomial(std::move(keys), gm)] += c;
                               });
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Any f with f(G) = α_e f(G∖e) + β_e f(G/e) off loops, (α_e + β_e) f(G∖e) on
// loops, and Π z_s on edgeless graphs.
template <class S>
VValue recipe_eval(const MarkedGraph& g, const std::map<int, S>& labels, const SemigroupSpec<S>& spec,
                   const EdgeWeights& alpha, const EdgeWeights& beta)
{
    VValue out;
    std::vector<int> gamma;
    std::function<Rational(int)> a = [&](int id) { return alpha.at(id); };
    std::function<Rational(int)> b = [&](int id) { return beta.at(id); };
    detail::recurse<S, Rational>(detail::labelled(g, labels), spec, Rational(1), gamma, a, b, false,
                                 [&](std::vector<std::string> keys, const std::vector<int>&, const Rational& c) {
                                     std::sort(keys.begin(), keys.end());
                                     out[keys] += c;
                                 });
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, Mark> mark_labels(const MarkedGraph& g);
std::map<int, int> weight_labels(const MarkedGraph& g);

} // namespace gpoly
