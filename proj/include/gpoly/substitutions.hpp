#pragma once

#include "gpoly/symfn.hpp"
#include "gpoly/zpoly.hpp"

#include <utility>

namespace gpoly {

// D_•(w,d) = Σ_{i=0}^{d} (-1)^i C(d,i) z_{w-i,0} z_{1,0}^i
ZPoly d_bullet(int w, int d);

// z_{w,d} ↦ d_bullet(w,d), a ring homomorphism fixing y.
ZPoly undot(const ZPoly& f);

// z_{w,d} ↦ z_{w,0}
ZPoly forget_dots(const ZPoly& f);

// Sets z_{1,0} = 0.
ZPoly drop_z1(const ZPoly& f);

// y = 0, then z_{w1,0}...z_{wk,0} ↦ st_{(w1,...,wk)}.  Throws InvalidInput if a
// dotted variable survives y = 0.
SymFn subst_star(const ZPoly& f);

// st_λ ↦ z_λ (all indices undotted); inverse of subst_star on y-free input.
ZPoly star_to_zpoly(const SymFn& f);

// True when expanding undot(f) term by term never adds contributions of
// opposite sign into the same monomial.
bool undot_is_cancellation_free(const ZPoly& f);

// Two different polynomials with the same undotting.
std::pair<ZPoly, ZPoly> undot_nonuniqueness_demo();

} // namespace gpoly
