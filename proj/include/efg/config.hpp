#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efg/function.hpp"
#include "efg/rational.hpp"
#include "efg/signal.hpp"

namespace efg {

/// Pebble positions indexed by label (position 0 is x1).
using Assignment = std::vector<Rational>;

/// `left` lives in structure A, `right` in structure B; labels align by position.
struct Configuration {
    Assignment left;
    Assignment right;

    std::size_t size() const { return left.size(); }
    /// Throws std::invalid_argument when the two sides differ in length.
    void check() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class Player { Spoiler, Duplicator };
enum class Side { A, B };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
std::string to_string(Player p);
std::string to_string(Side s);

/*
 * Rules of one game.  Without a pebble bound and without locality every
 * move places a fresh pebble (replacing one is never better for Spoiler
 * there).  With a bound k Spoiler may add a pebble while fewer than k are
 * placed or move any placed one; with locality D he may also move placed
 * pebbles, and every assignment must keep diameter <= D.
 */
struct GameSpec {
    int rounds = 0;
    std::optional<int> pebbles;
    std::optional<Rational> locality;

    bool reuse_allowed() const { return pebbles.has_value() || locality.has_value(); }
    std::string str() const;
};

/// label == current size places a fresh pebble.
struct Move {
    Side side = Side::A;
    std::size_t label = 0;
    Rational point;

    friend bool operator==(const Move&, const Move&) = default;
};

struct Round {
    Move move;
    Rational response;
};

/// A game in progress: the starting configuration and the rounds played so far.
struct Play {
    Configuration start;
    std::vector<Round> rounds;

    Configuration current() const;
};

/// Applies one round to a configuration.
Configuration apply_round(const Configuration& c, const Move& m, const Rational& response);

Rational diameter(const Assignment& u);
Rational frac(const Rational& x);

/// floor(u_i - u_j) = floor(v_i - v_j) for all i, j.  Throws on a length mismatch.
bool equiv_diff(const Assignment& u, const Assignment& v);

/*
 * The defining form of the same relation: for every integer c with
 * |c| <= bound, u_i - u_j < c iff v_i - v_j < c and u_i - u_j = c iff
 * v_i - v_j = c.  Agrees with equiv_diff when bound exceeds both diameters.
 */
bool equiv_diff_definitional(const Assignment& u, const Assignment& v, std::int64_t bound);

/// Indices grouped by frac(u_i - u_k), ascending; each group holds ties.
std::vector<std::vector<std::size_t>> frac_order(const Assignment& u, std::size_t k);

/*
 * Canonical member of the class of u under order- and step-translation-
 * preserving bijections of R: the least point goes to 0, integer parts of
 * (u_i - min) / step are kept and the distinct fractional parts become
 * 0, 1/t, ..., (t-1)/t in order, scaled back by step.  step = 0 keeps the
 * order type only (ranks 0, 1, ...).  Two assignments have the same image
 * iff they are equivalent by difference constraints in units of step.
 */
Assignment canonical_difference_type(const Assignment& u, const Rational& step);

/// frac(u_i - u_1) is non-decreasing in i.
bool is_increasing(const Assignment& u);

/*
 * The configuration satisfies the same atoms x = y, x < y, P(x) and
 * x = f(y) on both sides.
 */
bool partial_isomorphism(const Configuration& c, const Signal& a, const Signal& b,
                         const FunctionSpec& fn = FunctionSpec::successor());

/*
 * Whether adding the pair (u, v) to a configuration that already is a
 * partial isomorphism keeps it one; `skip` names a label to ignore (the
 * pebble being moved).
 */
bool extends_partial_isomorphism(const Assignment& us, const Assignment& vs, const Rational& u, const Rational& v,
                                 const Signal& a, const Signal& b, const FunctionSpec& fn,
                                 std::optional<std::size_t> skip = std::nullopt);

}  // namespace efg
