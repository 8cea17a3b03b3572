#pragma once

#include <optional>
#include <vector>

#include "efg/metric.hpp"
#include "efg/solver.hpp"
#include "efg/strategy.hpp"

namespace efg {

/*
 * Split of a sorted assignment u_0 < ... < u_{s-1} (0-based) into the
 * left part u_0..u_l, the middle part u_l..u_r and the right part
 * u_r..u_{s-1}; neighbouring parts share their boundary pebble.
 */
struct Decomposition {
    std::size_t l = 0;
    std::size_t r = 0;

    Assignment left(const Assignment& u) const;
    Assignment middle(const Assignment& u) const;
    Assignment right(const Assignment& u) const;
    Configuration left(const Configuration& c) const;
    Configuration middle(const Configuration& c) const;
    Configuration right(const Configuration& c) const;
    /// u_l - u_{l-1}, +infinity when l = 0.
    ExtendedRational left_margin(const Assignment& u) const;
    /// u_{r+1} - u_r, +infinity when r = s - 1.
    ExtendedRational right_margin(const Assignment& u) const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/*
 * Decomposition of a sorted 3-configuration by which of the two gaps
 * exceed 2^n: both small gives middle u_0 u_1 u_2; both large gives
 * middle u_1; otherwise the middle is the pair across the small gap.
 * Throws std::invalid_argument if an assignment is unsorted or the two
 * sides disagree on which gaps exceed 2^n.
 */
Decomposition decompose(const Configuration& c, int n);

/// Checks diam(middle) <= 2^(n+1), margins > 2^n and outer parts of size <= 2, on both sides.
bool satisfies_desiderata(const Configuration& c, const Decomposition& d, int n);

/*
 * Duplicator strategy for the n-round game from c built from strategies
 * for the left and right n-round games and the middle 3n-round D-local
 * game.  With k rounds left and boundaries u_l, u_r, a move below
 * u_l - 2^(k-1) goes to the left strategy, above u_r + 2^(k-1) to the
 * right one, and otherwise to the middle one.  A middle move also plays
 * the forced boundary moves u_l - 2^(k-1) -> v_l - 2^(k-1) and
 * u_r + 2^(k-1) -> v_r + 2^(k-1) in the middle game and in the left and
 * right games, which become the new boundaries.  Sub-games keep every
 * pebble they saw.
 */
class ComposedDuplicator : public DuplicatorStrategy {
public:
    enum class Part { Left, Middle, Right };

    /// Throws std::invalid_argument unless c is sorted and the margin and locality conditions hold.
    ComposedDuplicator(DuplicatorPtr left, DuplicatorPtr middle, DuplicatorPtr right, Configuration c,
                       Decomposition d, int n, Rational locality);

    Rational respond(const Play& play, int rounds_left, const Move& move) const override;
    /// Sub-game that answers `move` after `play`.
    Part route(const Play& play, const Move& move) const;

private:
    struct State;
    State replay(const Play& play) const;
    Part route(const State& s, const Move& move) const;
    Rational answer(State& s, const Move& move) const;

    DuplicatorPtr left_, middle_, right_;
    Configuration start_;
    Decomposition d_;
    int n_;
    Rational locality_;
};

/*
 * Certificate for the middle game: the middle assignments are translates
 * v = u + t and A(x) = B(x + t) on [max(u) - D, min(u) + D], which every
 * D-local play without pebble reuse stays inside.  Returns t.
 */
std::optional<Rational> mirror_certificate(const Signal& a, const Signal& b, const Configuration& middle,
                                           const Rational& locality);

/*
 * "Duplicator wins the (4n+2)-round 3-pebble game" implies "Duplicator
 * wins the n-round game", from a configuration of at most 3 pebbles.  The
 * consequent is decided first; the antecedent by iterative deepening on
 * Spoiler wins.
 */
ImplicationResult check_3pebble_to_unrestricted(const Signal& a, const Signal& b, const Configuration& c, int n,
                                                const SolverOptions& opts = {});

}  // namespace efg
