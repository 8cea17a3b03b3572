#pragma once

#include "efg/formula.hpp"

namespace efg {

/*
 * Rewrites every atom into the shapes x = y, x < y, P(x), x = f(y) by
 * peeling one application at a time:
 *
 *   f^m(x) ~ f^n(y), m > 0   ->  Ez. (z = f(x) & f^(m-1)(z) ~ f^n(y))
 *   P(f^m(x)), m > 0         ->  Ez. (z = f(x) & P(f^(m-1)(z)))
 *
 * (and symmetrically on the right of a comparison).  The introduced
 * variable is the smallest name of a fixed pool that does not occur in
 * the atom being rewritten; the pool is the input's variables extended to
 * at least three names, so a 3-variable input stays 3-variable.
 * Terms over the fixed point constant are rejected.
 */
Formula unnest(const Formula& f);

}  // namespace efg
