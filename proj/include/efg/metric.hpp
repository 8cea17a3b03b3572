#pragma once

#include <cstdint>
#include <optional>

#include "efg/solver.hpp"
#include "efg/strategy.hpp"

namespace efg {

/*
 * A difference constraint u_i - u_j ~ c (c a non-negative integer) that
 * holds for the assignment in `side` and fails for the other one.
 * Labels are 0-based here.
 */
struct MetricViolation {
    enum class Kind { Less, Equal };

    Side side = Side::A;
    std::size_t i = 0;
    std::size_t j = 1;
    Kind kind = Kind::Less;
    std::int64_t c = 0;

    /// Least n with c < 2^n (Less) or c <= 2^n (Equal).
    int rounds_needed() const;
    bool holds(const Configuration& conf) const;
    std::string str() const;
};

/// Violations of every pebble pair, ordered by rounds_needed, then side, c, i, j.
std::vector<MetricViolation> metric_violations(const Configuration& c);

/*
 * Spoiler's halving strategy in the 3-pebble game: with c' = floor(c/2)
 * it pebbles u_k = u_i - (c - c') in the violating structure, reusing the
 * label outside {i, j}.  Either (u_i, u_k) violates "= c - c'" or
 * (u_k, u_j) violates "~ c'", so the strategy recurses on the cheapest
 * violation of the new configuration.  The first move follows `root`
 * when given.
 */
SpoilerPtr spoiler_metric_strategy(std::optional<MetricViolation> root = std::nullopt);

/*
 * Checks the precondition (root holds on a 2-configuration and
 * rounds_needed() <= n) and returns the strategy; throws
 * std::invalid_argument otherwise.
 */
SpoilerPtr spoiler_metric_strategy(const Configuration& c, int n, const MetricViolation& root);

/*
 * Whether the solver finds a Spoiler win in the m-round 3-pebble game
 * from a 3-configuration with u not equivalent to v and min diameter at
 * most 2^m.  Throws std::invalid_argument when the precondition fails.
 */
bool check_nonequiv_spoiler(const Signal& a, const Signal& b, const Configuration& c, int m,
                            const SolverOptions& opts = {});

/*
 * Whether "Spoiler wins the n-round 2^m-local game" implies "Spoiler
 * wins the (m + n)-round 3-pebble game", both by the solver.  Throws
 * std::invalid_argument unless both diameters are at most 2^m.
 */
struct ImplicationResult {
    // nullopt when the other side already settles the implication
    std::optional<bool> antecedent;
    std::optional<bool> consequent;
    bool holds() const { return !(antecedent == true && consequent == false); }
};
ImplicationResult check_local_to_3pebble(const Signal& a, const Signal& b, const Configuration& c, int m, int n,
                                         const SolverOptions& opts = {});

}  // namespace efg
