#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efg/config.hpp"

namespace efg {

using Sequence = std::vector<int>;

/// Lexicographic order; a strict prefix is smaller.  Sequences must be nonempty.
std::strong_ordering lex_compare(const Sequence& s, const Sequence& t);
/// Same last element.
bool e_related(const Sequence& s, const Sequence& t);

/// Nonempty sequences over [-M, M] of length <= L, in lexicographic order.
class SeqModel {
public:
    /// Throws std::invalid_argument unless M >= 1 and L >= 1 (and the model stays below 10^6 elements).
    SeqModel(int M, int L);

    int M() const { return M_; }
    int L() const { return L_; }
    std::size_t size() const { return elems_.size(); }
    const Sequence& at(std::size_t i) const { return elems_[i]; }
    const std::vector<Sequence>& elements() const { return elems_; }
    std::optional<std::size_t> index_of(const Sequence& s) const;
    /// Class of s: its last element shifted to [0, 2M].
    int class_of(std::size_t i) const { return elems_[i].back() + M_; }
    int classes() const { return 2 * M_ + 1; }

private:
    int M_, L_;
    std::vector<Sequence> elems_;
};

/// Pairs (s, t) of E-related elements, lexicographic on S x S, with g(s, t) = (t, s).
class PairModel {
public:
    explicit PairModel(SeqModel base);

    const SeqModel& base() const { return base_; }
    std::size_t size() const { return pairs_.size(); }
    /// Indices into base().
    const std::pair<std::size_t, std::size_t>& at(std::size_t i) const { return pairs_[i]; }
    std::size_t g(std::size_t i) const { return g_[i]; }
    bool is_fixed(std::size_t i) const { return g_[i] == i; }
    std::size_t diagonal(std::size_t base_index) const { return diag_[base_index]; }

private:
    SeqModel base_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::size_t> g_;
    std::vector<std::size_t> diag_;
};

/// Ey (x < u < g(u) < y & Av (x < v < u | g(u) < v < y -> g(v) != v)), quantifying over the model.
bool psi_eval(const PairModel& m, std::size_t x, std::size_t y);

struct InterpretationWitness {
    std::string atom;
    std::vector<std::size_t> args;
    bool source = false;
    bool image = false;
};

/*
 * Checks both interpretations on sampled tuples: S in E through the
 * diagonal (x < y, P(x), E(x, y) as psi(x, y) | psi(y, x)) and E in S on
 * pairs (x < y, x = y, x = g(y), P(x)).  P is the class set `p_classes`.
 */
struct InterpretationReport {
    std::size_t checked = 0;
    std::vector<InterpretationWitness> failures;
    /// E(x, y) on diagonal pairs: agreements of psi(x, y) | psi(y, x), and of that disjunction with x = y added.
    std::size_t e_pairs = 0;
    std::size_t e_agree = 0;
    std::size_t e_agree_with_equality = 0;
    /// Disagreeing E pairs with x != y; the truncation caveat applies to these.
    std::size_t e_off_diagonal_failures = 0;
};

InterpretationReport check_interpretations(const PairModel& m, std::size_t samples, std::uint64_t seed = 1,
                                           const std::vector<int>& p_classes = {0});

/*
 * A finite linear order 0 < 1 < ... < n-1 with an equivalence (class ids),
 * monadic predicates (bit masks) and an optional unary function.
 */
struct FiniteStructure {
    std::vector<int> cls;
    std::vector<std::uint32_t> preds;
    std::vector<std::size_t> fn;

    std::size_t size() const { return cls.size(); }
};

/// S with P the union of the given E-classes.
FiniteStructure labelled(const SeqModel& m, const std::vector<int>& p_classes);

/*
 * k-pebble r-round EF game on finite structures from the empty
 * configuration: fresh pebbles while fewer than k are placed, then
 * moves of placed ones.  Exhaustive with memoization.
 */
class FiniteGame {
public:
    FiniteGame(FiniteStructure a, FiniteStructure b, int pebbles);
    Player winner(int rounds);
    Player winner(const std::vector<std::pair<std::size_t, std::size_t>>& config, int rounds);
    std::uint64_t nodes() const { return nodes_; }

private:
    using Config = std::vector<std::pair<std::size_t, std::size_t>>;
    bool spoiler_wins(const Config& c, int rounds);
    bool compatible(const Config& c, std::size_t skip, std::size_t u, std::size_t v) const;

    FiniteStructure a_, b_;
    int pebbles_;
    std::uint64_t nodes_ = 0;
    // keyed on the sorted, deduplicated pairs and the rounds left
    std::map<std::pair<Config, int>, bool> memo_;
};

struct ExperimentResult {
    int k = 0;
    int rounds = 0;
    /// k-pebble r-round game, k classes vs k + 1 classes.
    Player k_pebble = Player::Duplicator;
    /// (k+1)-pebble (r+1)-round game on the same pair.
    Player companion = Player::Spoiler;
    /// k-pebble game with k classes on both sides.
    Player identical = Player::Duplicator;
};

/// Throws std::invalid_argument unless 2M + 1 >= k + 2 and k >= 1, r >= 0.
ExperimentResult inexpressibility_experiment(const SeqModel& m, int k, int rounds);

}  // namespace efg
