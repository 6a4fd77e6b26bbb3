#pragma once

#include "gpoly/graph.hpp"
#include "gpoly/symfn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gpoly {

// Which internal edge to branch on, comparing (smaller endpoint, larger endpoint).
enum class EdgeRule { smallest, largest };

struct DncNode {
    MarkedGraph graph;
    int parent = -1;
    int sign = 1;  // label of the edge from the parent
    int edge = -1; // branching edge; -1 at leaves
    std::vector<int> children;
};

// nodes[0] is the root.  Children of an internal node, in order: H∖e (+),
// (H⊙e)^s (+), (H⊙e)^s∖ℓ_e (−).
struct DncTree {
    std::vector<DncNode> nodes;

    std::vector<int> leaves() const;
    std::vector<int> path_to(int node) const; // root first
};

struct DncOptions {
    bool emit_tree = false;
    EdgeRule rule = EdgeRule::smallest;
    // Only used without emit_tree: reuse results for repeated components.
    bool memoize = true;
    std::size_t max_nodes = 5'000'000;
};

struct DncResult {
    SymFn st{Basis::st};
    std::optional<DncTree> tree;
};

// Chromatic symmetric function of a simple unweighted graph in the star basis.
DncResult dnc_expand(const MarkedGraph& g, const DncOptions& opts = {});
SymFn star_expansion(const MarkedGraph& g);

// (-1)^{number of minus edges along a root-to-node path}.
int dnc_sign(const DncTree& t, const std::vector<int>& path);

// λ of a star forest: its component sizes.
Partition star_forest_type(const MarkedGraph& h);

// Every coefficient of st_λ has sign (-1)^{m_1(λ) - ι(G)}.
bool isolated_sign_rule_holds(const SymFn& st, std::size_t isolated_in_root);

std::string render_tree(const DncTree& t);

} // namespace gpoly
