#pragma once

#include "gpoly/bigint.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/symfn.hpp"

#include <map>
#include <vector>

namespace gpoly {

inline constexpr int kSubsetBudget = 22;

// X_G = Σ_{A ⊆ E} (-1)^{|A|} p_{λ(A)}, parts being total component weights.
// A graph with a loop has no proper colouring and gives zero.
SymFn csf_power(const MarkedGraph& g, int max_edges = kSubsetBudget);

// Proper k-colourings by deletion-contraction.
BigInt chromatic_poly_eval(const MarkedGraph& g, long k);

// Exponent vector (length nvars) -> coefficient.
using MonomialTable = std::map<std::vector<int>, BigInt>;

// Σ over proper colourings κ: V -> {1..nvars} of Π_v x_{κ(v)}^{w(v)}.
MonomialTable weighted_csf(const MarkedGraph& g, int nvars, long max_colourings = 1L << 22);

// p_λ evaluated in nvars variables.
MonomialTable p_to_monomials(const SymFn& f, int nvars);

// Value at x_1 = ... = x_k = 1 (p_λ ↦ k^{ℓ(λ)}); f must be a p-expansion.
BigInt principal_specialization(const SymFn& f, long k);

} // namespace gpoly
