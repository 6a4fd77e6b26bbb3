#pragma once

#include "gpoly/graph.hpp"

#include <string>

namespace gpoly {

// Isomorphism-invariant string for a marked forest: each tree is encoded
// rooted at its centroid(s), with marks in the node labels.  Throws
// InvalidInput on anything that is not a forest.
std::string canonical_form(const MarkedGraph& forest);

bool mark_isomorphic(const MarkedGraph& a, const MarkedGraph& b);

} // namespace gpoly
