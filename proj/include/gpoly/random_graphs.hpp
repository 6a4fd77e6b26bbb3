#pragma once

#include "gpoly/graph.hpp"
#include "gpoly/rng.hpp"

namespace gpoly {

// Weight in [1, max_weight]; dots in [0, w-1], or [0, w-2] when strict.
Mark random_mark(Rng& rng, int max_weight, bool strict = false);

// n vertices, m edges; loops and parallel edges allowed unless simple.
MarkedGraph random_multigraph(Rng& rng, int n, int m, int max_weight, bool simple = false);
MarkedGraph random_simple_graph(Rng& rng, int n, int edge_percent);

// Uniform labelled tree from a random Prüfer sequence; unit marks.
MarkedGraph random_tree(Rng& rng, int n);
// Random tree on each part of a random composition of n.
MarkedGraph random_forest(Rng& rng, int n);

// Replaces every mark by random_mark.
MarkedGraph with_random_marks(Rng& rng, MarkedGraph g, int max_weight, bool strict = false);
// Replaces every mark by an undotted weight in [min_weight, max_weight].
MarkedGraph with_random_weights(Rng& rng, MarkedGraph g, int min_weight, int max_weight);

// Decodes a Prüfer sequence over {0..n-1} (length n-2).
MarkedGraph tree_from_pruefer(const std::vector<int>& seq);

} // namespace gpoly
