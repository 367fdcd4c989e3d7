#pragma once

#include "pp/gf.hpp"
#include "pp/series.hpp"

namespace pp::funceq {

// Fixed-point solvers for the combinatorial functional equations, iterated
// in the t-adic metric from the zero series.  They are independent of the
// kernel-method closed forms and serve as the primary cross-check; the
// four-variable system is the only route to unrestricted PP counts.

// B(t,u,w): bar graphs by half-perimeter, width, last-column height.
TruncatedSeries solve_feqB(int order);

// R(t,u,w): generic three-sided PPs; consumes the closed-form B(t,u).
TruncatedSeries solve_feqR(int order, const gf::GfCatalog& cat);

struct FGH {
    TruncatedSeries F, G, H;
    int passes = 0;
};

// Coupled system for class F and its auxiliaries G, H (unrestricted PPs).
FGH solve_feq4sd(int order);

// 8 * F(t,1,1,1): the full unrestricted PP counting series.
TruncatedSeries pp_all_gf(int order);

}  // namespace pp::funceq
