#pragma once

#include "gpoly/bigint.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/symfn.hpp"
#include "gpoly/zpoly.hpp"

#include <string>
#include <vector>

namespace gpoly {

enum class Shape { star, two_star, other };

std::string to_string(Shape s);

// Multisets are kept sorted in decreasing order.
struct TreeStats {
    int n = 0;
    long N = 0;
    std::vector<int> weights;
    std::vector<int> leaf_weights;
    Shape shape = Shape::other;
};

// ((w1,k1),(w2,k2)) with w1 > w2, or w1 == w2 and k1 <= k2.
struct StrictPair {
    Mark first;
    Mark second;

    auto operator<=>(const StrictPair&) const = default;
};

// L[i][j]: pendant edges from center i to leaves of weight leaf_weight[j].
struct LeafCounts {
    int center[2] = {0, 0};
    std::vector<int> leaf_weight; // distinct, decreasing
    std::vector<long> mu;
    std::vector<long> L[2];
};

TreeStats stats_from_m(const ZPoly& m);

// Edges joining a vertex of weight w1 to one of weight w2.
BigInt alpha(const ZPoly& m, int w1, int w2);
BigInt alpha(const ZPoly& m, const std::vector<int>& weights, int w1, int w2);
// Independent edge pairs {e1, e2}, e_i joining weight w0 to weight w_i; 0 when
// the weight multiset cannot supply {w0, w0, w1, w2}.
BigInt beta(const ZPoly& m, int w0, int w1, int w2);
BigInt beta(const ZPoly& m, const std::vector<int>& weights, int w0, int w1, int w2);

MarkedGraph star_from_m(const ZPoly& m);
MarkedGraph twostar_from_m(const ZPoly& m);
LeafCounts twostar_counts_from_m(const ZPoly& m);
// Dispatches on the shape read from M.
MarkedGraph tree_from_m(const ZPoly& m);

struct DTopTerms {
    long N = 0;
    int n = 0;
    std::vector<int> weights;
    ZMonomial degree_one;
    ZMonomial top;
};

// Needs D of a strictly weighted tree.
DTopTerms top_and_degree_one_from_d(const ZPoly& d);

// Terms with exactly k factors other than z_1 (counted with multiplicity).
ZPoly d_layer(const ZPoly& d, int k);

std::vector<StrictPair> strict_pairs_from_d2(const ZPoly& d2, long N, int n);

// The degree-(n-1) terms of M, i.e. one z_{u+v,1} Π z_{W∖{u,v}} per edge.
ZPoly mdeg_n1_from_d(const ZPoly& d, long N, int n, const std::vector<int>& weights);

TreeStats stats_from_d(const ZPoly& d);
MarkedGraph star_from_d(const ZPoly& d);
MarkedGraph twostar_from_d(const ZPoly& d);
LeafCounts twostar_counts_from_d(const ZPoly& d);
MarkedGraph tree_from_d(const ZPoly& d);

// Proper trees of diameter at most 5 from the star expansion of X_G.
MarkedGraph tree_from_csf_star(const SymFn& x);

MarkedGraph two_star_from_counts(const LeafCounts& c);

} // namespace gpoly
