#pragma once

// Exact distance and rank solvers.
//
// Candidates g are effective divisors enumerated by degree 0, 1, 2, ... and,
// within a degree, as nondecreasing vertex sequences in lexicographic order
// (so (2,1,0) = {0,0,1} comes before (2,0,1) = {0,0,2}). The first hit is
// returned, which makes the witness the lexicographically least minimiser.
//
// Each candidate is evaluated incrementally from its prefix: a chip added to
// the stabilisation of f + g' has the same halting behaviour as the chip
// added to f + g' itself, and likewise the greedy exactly-once closure of
// f + g' extends to f + g' + e_v. The search is still exhaustive; the solvers
// are exponential in the answer.

#include "divrank/divisor.hpp"
#include "divrank/multigraph.hpp"

namespace divrank {

struct DistanceResult {
    Chips value = 0;
    Divisor witness;
};

// Sum over v of max(0, d(v) - f(v)); adding that many chips makes f
// pointwise >= d_G, which is recurrent.
Chips upper_bound_to_recurrent(const Multigraph& g, const Divisor& f);

// Minimum deg(g) over effective g with f + g non-halting.
DistanceResult dist_nonhalt(const Multigraph& g, const Divisor& f);

// Minimum deg(g) over effective g with f + g recurrent.
DistanceResult dist_rec(const Multigraph& g, const Divisor& f);

// dist_nonhalt(d_G - 1 - f) - 1, or -1 straight away when deg(f) < 0.
Chips rank(const Multigraph& g, const Divisor& f);

}  // namespace divrank
