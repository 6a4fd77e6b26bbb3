#pragma once

#include "gpoly/graph.hpp"
#include "gpoly/zpoly.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace gpoly {

// Strict "less than" defining a total order on marks.
struct MarkOrder {
    std::string name;
    std::function<bool(Mark, Mark)> less;
};

// (w, d) lexicographic, ascending.
MarkOrder lex_order();
// A pseudo-random total order: marks ranked by a seeded hash, ties by lex.
MarkOrder hashed_order(std::uint64_t seed);

// M' of a marked forest.  Among equal maximal leaf marks the leaf with the
// smallest vertex id is taken.
ZPoly m_prime(const MarkedGraph& forest, const MarkOrder& order = lex_order());

// undot(M') == D.
bool m_prime_undot_check(const MarkedGraph& forest, const MarkOrder& order = lex_order());

// Σ over ordered splits A1 ⊔ A2 = B of M(T/A1 ∖ A2); equals M(T) for any B.
ZPoly partial_states(const MarkedGraph& g, const std::vector<int>& b);

} // namespace gpoly
