#pragma once

#include "gpoly/csf.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/symfn.hpp"
#include "gpoly/zpoly.hpp"

#include <vector>

namespace gpoly {

// M by the defining recursion.  Edges are processed in `edge_order` first
// (ids absent from the graph are skipped), then by increasing id.
// Forest subproblems are cached by canonical form.
ZPoly m_poly_dc(const MarkedGraph& g, const std::vector<int>& edge_order = {});

// Σ_{A⊆E} z_{λ(G,m,A)} (y-1)^{|A|-r(A)}
ZPoly m_poly_states(const MarkedGraph& g, int max_edges = kSubsetBudget);

// Σ over connected vertex partitions of Π z_{m(V_i)} T_{G[V_i]}(1,y).
ZPoly m_poly_bond(const MarkedGraph& g, int max_vertices = 9);

// States model within the subset budget, recursion beyond it.
ZPoly m_poly(const MarkedGraph& g);

// W in the variables z_{w,0} and y.  Rejects dotted marks.
ZPoly w_poly(const MarkedGraph& g);

// undot(M(core G)).
ZPoly d_poly(const MarkedGraph& g);

// D with z_1 = 0; equals W for strictly weighted graphs.  Rejects other input.
ZPoly w_from_d(const MarkedGraph& g);

// (-1)^{|V|} W(z_i = -p_i, y = 0): the weighted chromatic symmetric function.
SymFn csf_from_w(const MarkedGraph& g);

// subst_star(D(G) at y = 0).
SymFn csf_from_d(const MarkedGraph& g);

} // namespace gpoly
