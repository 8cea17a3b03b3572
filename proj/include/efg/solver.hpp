#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "efg/candidates.hpp"
#include "efg/config.hpp"
#include "efg/json_io.hpp"
#include "efg/strategy.hpp"

namespace efg {

struct SolverOptions {
    Discretization discretization = Discretization::standard();
    /// Also offer Duplicator the translate of the move by each pebble pair's offset.
    bool mirror_responses = true;
    /// Restricts both players to the open interval (above, below), for games on a substructure.
    std::optional<Rational> above;
    std::optional<Rational> below;

    bool in_domain(const Rational& x) const { return (!above || *above < x) && (!below || x < *below); }
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
};

/// Candidate points of both structures for the given configuration and rounds.
struct CandidateSets {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

/*
 * Candidate points per structure: candidate_points anchored at the
 * structure's own breakpoints and pebbles, horizon horizon_for(rounds),
 * and, under locality D, only points within D of every pebble.
 */
CandidateSets candidate_moves(const Signal& a, const Signal& b, const Configuration& c, const GameSpec& spec,
                              const FunctionSpec& fn = FunctionSpec::successor(),
                              const Discretization& d = Discretization::standard());

/*
 * Exact min-max over candidate moves for one pair of structures and one
 * set of rules (GameSpec rounds are supplied per query).
 *
 * Values are memoized on the configuration with labels forgotten
 * (sorted, duplicate pairs merged).  A side whose signal is empty under a
 * translation is searched from canonical_difference_type, since its
 * automorphisms act transitively on each such class.  A
 * stored Spoiler win at r rounds also answers r' > r and a Duplicator win
 * answers r' < r.
 *
 * Not thread-safe; use one solver per thread.
 */
class GameSolver {
public:
    GameSolver(Signal a, Signal b, GameSpec spec, FunctionSpec fn = FunctionSpec::successor(),
               SolverOptions opts = {});

    const Signal& structure(Side s) const { return s == Side::A ? a_ : b_; }
    const GameSpec& spec() const { return spec_; }
    const FunctionSpec& function() const { return fn_; }
    const SolverOptions& options() const { return opts_; }
    const SolverStats& stats() const { return stats_; }

    bool is_partial_isomorphism(const Configuration& c) const;
    /// Replaces the assignment of each empty structure by its canonical_difference_type (no-op otherwise).
    Configuration canonical(const Configuration& c) const;

    Player winner(const Configuration& c, int rounds);
    Player winner(const Configuration& c) { return winner(c, spec_.rounds); }

    /// Smallest winning move (A before B, then by point, then by label); nullopt if Spoiler does not win.
    std::optional<Move> winning_move(const Configuration& c, int rounds);
    /// Smallest admitted response after which Duplicator wins the remaining rounds - 1; nullopt if none.
    std::optional<Rational> winning_response(const Configuration& c, int rounds, const Move& m,
                                             const std::function<bool(const Rational&)>& admit = {});

    /// Legal Spoiler moves over the candidate points, in the tie-break order.
    std::vector<Move> spoiler_moves(const Configuration& c, int rounds) const;
    /// Legal responses: candidate points (plus mirror points), ascending.
    std::vector<Rational> responses(const Configuration& c, int rounds, const Move& m) const;
    /// Under locality, restricted to points some legal move could use; `replaced` fixes the moved label.
    std::vector<Rational> candidates(Side s, const Assignment& pebbles, int rounds,
                                     std::optional<std::size_t> replaced = std::nullopt) const;

    bool legal_move(const Configuration& c, const Move& m) const;
    bool legal_response(const Configuration& c, const Move& m, const Rational& response) const;
    /// The move is legal, and the resulting configuration is a partial isomorphism.
    bool survives(const Configuration& c, const Move& m, const Rational& response) const;

private:
    using Pairs = std::vector<std::pair<Rational, Rational>>;
    struct Entry {
        int spoiler_min = 1 << 30;  // least rounds known to be a Spoiler win
        int duplicator_max = -1;    // most rounds known to be a Duplicator win
    };
    struct KeyHash {
        std::size_t operator()(const Pairs& p) const noexcept;
    };

    bool spoiler_wins(const Configuration& c, int rounds);
    // response candidates of one node, keyed by responding side and (under locality) moved label
    using ResponseCache = std::map<std::pair<int, std::size_t>, std::vector<Rational>>;

    bool duplicator_survives(const Configuration& c, int rounds, const Move& m, ResponseCache& cache);
    std::vector<Move> ordered_moves(const Configuration& c, int rounds) const;
    std::vector<Rational> ordered_responses(const Configuration& c, int rounds, const Move& m,
                                            ResponseCache& cache) const;
    std::vector<Rational> mirror_points(const Configuration& c, const Move& m) const;
    Pairs key(const Configuration& c) const;
    Rational step_;

    Signal a_, b_;
    GameSpec spec_;
    FunctionSpec fn_;
    SolverOptions opts_;
    std::vector<Rational> bp_a_, bp_b_;
    bool canon_a_ = false, canon_b_ = false;
    SolverStats stats_;
    std::unordered_map<Pairs, Entry, KeyHash> memo_;
};

using SolverPtr = std::shared_ptr<GameSolver>;

/// Solver-backed strategies; they share (and fill) the solver's memo.
SpoilerPtr solver_spoiler(SolverPtr solver);
DuplicatorPtr solver_duplicator(SolverPtr solver);

struct SolveResult {
    Player winner = Player::Duplicator;
    /// Strategy of the winner; the loser's entry plays best-effort moves.
    SpoilerPtr spoiler;
    DuplicatorPtr duplicator;
    std::vector<Round> principal_variation;
    std::size_t candidate_count = 0;
    SolverStats stats;
    SolverPtr solver;
};

/// Throws std::invalid_argument when c violates the locality or pebble bound of spec.
SolveResult solve(const Signal& a, const Signal& b, const Configuration& c, const GameSpec& spec,
                  const FunctionSpec& fn = FunctionSpec::successor(), const SolverOptions& opts = {});

json solve_report(const SolveResult& r, const GameSpec& spec);
json move_to_json(const Move& m);
json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

/*
 * Exhaustive replays.  The strategy under test plays its side; the
 * opponent tries every legal candidate move (responses include the
 * mirror points).  spoiler_strategy_wins holds when every play leaves the
 * partial isomorphisms within `rounds`; duplicator_strategy_survives when
 * none does.  The strategy's own moves must be legal.
 */
bool spoiler_strategy_wins(GameSolver& rules, const Configuration& start, int rounds, const SpoilerStrategy& s);
bool duplicator_strategy_survives(GameSolver& rules, const Configuration& start, int rounds,
                                  const DuplicatorStrategy& d);

}  // namespace efg
