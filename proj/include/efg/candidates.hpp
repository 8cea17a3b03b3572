#pragma once

#include <optional>
#include <span>
#include <vector>

#include "efg/function.hpp"
#include "efg/rational.hpp"

namespace efg {

/*
 * Knobs of the finite discretization shared by the evaluator and the game
 * solver.  The default places one midpoint in every gap and uses horizon
 * 2^n + n for n remaining rounds (or quantifier depth); the refined
 * setting doubles both the horizon and the number of interior points and
 * exists to check that verdicts do not depend on the discretization.
 */
struct Discretization {
    int horizon_scale = 1;
    int subdivisions = 2;  // gaps are cut into this many equal pieces

    static Discretization standard() { return {}; }
    static Discretization refined() { return {2, 4}; }

    friend bool operator==(const Discretization&, const Discretization&) = default;
};

/// 2^rounds + rounds, scaled.
int horizon_for(int rounds, const Discretization& d = {});

/*
 * Candidate points anchored at `anchors`:
 *
 *   R0  = { f^z(b) : b in anchors, |z| <= horizon }  (plus the fixed point of f, if any)
 *   R   = R0, the interior subdivision points of consecutive elements of R0,
 *         and min(R0) - 1, min(R0) - 2, max(R0) + 1, max(R0) + 2.
 *
 * Orbit points of a non-translation whose numerator or denominator exceeds
 * 2^30 in magnitude are dropped.  With no anchors at all the origin is used.  The result is sorted and
 * duplicate-free.
 *
 * When a closed range [lo, hi] is given, lo and hi join R0 and only the part
 * of R inside the range is produced; the outer points are added only on an
 * unbounded side.  Every gap of the unrestricted R that meets the range
 * still contains a produced point.
 */
std::vector<Rational> candidate_points(std::span<const Rational> anchors, int horizon, const FunctionSpec& fn,
                                       int subdivisions = 2, const std::optional<Rational>& lo = std::nullopt,
                                       const std::optional<Rational>& hi = std::nullopt);

}  // namespace efg
