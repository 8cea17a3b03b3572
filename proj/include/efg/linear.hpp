#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efg/formula.hpp"
#include "efg/function.hpp"
#include "efg/signal.hpp"
#include "efg/solver.hpp"

namespace efg {

/// b / (1 - a); throws std::domain_error when a = 1.
Rational fixed_point(const FunctionSpec& fn);

/// x -> -x on every interval, closedness flags swapped.
Signal reflected(const Signal& s);

/*
 * Game verdict over (R, <, f) for monotone f(x) = a*x + b, a > 0.
 *   a = 1, b > 0: the signals are rescaled by 1/b and solved over (R, <, +1).
 *   a = 1, b < 0: reflected and rescaled by 1/|b|, then solved over (R, <, +1).
 *   a = 1, b = 0: solved directly.
 *   a != 1: the games on (-inf, x*) and (x*, inf) are solved separately and
 *   Duplicator is reported as winner iff she wins both and every predicate
 *   agrees at x*.
 * The split verdict is the ordered-sum combination: sound for Duplicator,
 * conservative for Spoiler.  Throws std::invalid_argument unless a > 0.
 */
struct MonotoneVerdict {
    enum class Route { Rescaled, Reflected, Direct, Split };

    Player winner = Player::Duplicator;
    Route route = Route::Direct;
    std::optional<Player> lower;
    std::optional<Player> upper;
    bool fixed_point_agrees = true;
};

MonotoneVerdict reduce_monotone(const Signal& a, const Signal& b, const FunctionSpec& fn, const GameSpec& spec,
                                const SolverOptions& opts = {});

struct RewriteStep {
    std::string rule;
    std::string before;
    std::string after;
};

/*
 * Stage entries hold whole formulas, so stages[i].after == stages[i+1].before,
 * stages.front().before is the input and stages.back().after the output.
 * atoms lists the individual atom rewrites of the simplification stage.
 */
struct RewriteTrace {
    std::vector<RewriteStep> stages;
    std::vector<RewriteStep> atoms;
};

struct AntitoneRewrite {
    /// Sentence over f with even powers only, no x*, fresh predicates P__f for P(f(.)).
    Formula formula = Formula::truth(true);
    /// The same sentence over g = f o f: every f^(2k) written as f^k.
    Formula over_square = Formula::truth(true);
    /// Pairs (P, P__f) of folded predicates.
    std::vector<std::pair<std::string, std::string>> fresh;
    RewriteTrace trace;
};

/// "P__f".
std::string fresh_predicate_name(const std::string& pred);

/*
 * Rewrites a sentence over (R, <, f), f antitone, into one over
 * (R, <, f o f): relativize each quantifier to (x*, inf), collapse powers
 * of x*, simplify atoms by parity, fold P(f^odd(x)) into P__f, eliminate
 * x* through Ey (y = f^2(y) & ...).
 * Throws std::invalid_argument on free variables, a non-antitone f, or a
 * fresh predicate name that already occurs.
 */
AntitoneRewrite antitone_rewrite(const Formula& phi, const FunctionSpec& fn);

/*
 * Atom simplification for variables ranging over (x*, inf), applied to a
 * fixpoint together with constant folding.  Idempotent.
 */
Formula simplify_antitone_atoms(const Formula& f, std::vector<RewriteStep>* log = nullptr);

/// No x* and no odd f-power.
bool is_clean_antitone_output(const Formula& f);

/// s extended with P__f = {x : P(f(x))} for every folded predicate.
Signal with_fresh_predicates(const Signal& s, const AntitoneRewrite& r, const FunctionSpec& fn);

struct AntitoneTrial {
    std::size_t index = 0;
    Signal signal;
    bool original = false;
    bool rewritten = false;
    bool agree() const { return original == rewritten; }
};

struct AntitoneReport {
    std::vector<AntitoneTrial> trials;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

/// Compares evaluate(phi, S, fn) with evaluate(over_square, S', f o f) on seeded random signals.
AntitoneReport verify_antitone_equivalence(const Formula& phi, const FunctionSpec& fn, int trials,
                                           std::uint64_t seed = 1);

}  // namespace efg
