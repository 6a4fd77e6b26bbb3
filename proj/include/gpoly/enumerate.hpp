#pragma once

#include "gpoly/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gpoly {

inline constexpr int kEnumerationCap = 14;

// One unweighted tree per isomorphism class, from the level-sequence
// successor of Wright, Richmond, Odlyzko and McKay.  Throws InvalidInput
// when n > cap.
void for_each_free_tree(int n, const std::function<void(const MarkedGraph&)>& visit, int cap = kEnumerationCap);
std::vector<MarkedGraph> enumerate_free_trees(int n, int cap = kEnumerationCap);

// Strictly weighted stars (1 or more vertices) and 2-stars of total weight N,
// one per ω-isomorphism class.
std::vector<MarkedGraph> enumerate_weighted_stars(int N);
std::vector<MarkedGraph> enumerate_weighted_two_stars(int N);

// Unweighted proper trees of diameter at most 5 on n vertices, built by
// uncoring the weighted stars and 2-stars of total weight n.
std::vector<MarkedGraph> enumerate_proper_diam5(int n, int cap = kEnumerationCap);

// Every internal vertex has a leaf neighbour.
bool is_proper_tree(const MarkedGraph& t);

// Every tree shape on n vertices with every weight assignment in [1, max_weight]^n.
void for_each_weighted_tree(int n, int max_weight, const std::function<void(const MarkedGraph&)>& visit);

// Connected simple graphs on n <= 7 vertices up to isomorphism.
std::vector<MarkedGraph> enumerate_connected_graphs(int n);

// Isomorphism-invariant code of a simple unweighted graph with at most 8 vertices.
std::uint64_t graph_certificate(const MarkedGraph& g);

} // namespace gpoly
