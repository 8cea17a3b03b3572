#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "efg/candidates.hpp"
#include "efg/formula.hpp"
#include "efg/function.hpp"
#include "efg/signal.hpp"

namespace efg {

using Valuation = std::map<std::string, Rational>;

struct EvalOptions {
    Discretization discretization = Discretization::standard();
    /// Re-evaluate with Discretization::refined() and throw on disagreement.
    bool stability_check = true;
};

class DiscretizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Truth of f in the structure (R, <, fn, S) under `env`.
 *
 * A quantifier Ex over a subformula of depth d and largest f-power p
 * ranges over candidate_points anchored at the signal breakpoints and the
 * values of the subformula's other free variables, with horizon
 * horizon_for(d) * max(1, p).  Between two consecutive candidates no
 * atom can change truth, so the enumeration is exact for this horizon.
 * Atoms of the form x ~ t with t free of x narrow the range first.
 *
 * Terms may use the fixed point constant when fn has one.
 * Throws std::invalid_argument on an unbound free variable and
 * DiscretizationError when the stability check fails.
 */
bool evaluate(const Formula& f, const Signal& s, const Valuation& env = {},
              const FunctionSpec& fn = FunctionSpec::successor(), const EvalOptions& opts = {});

}  // namespace efg
