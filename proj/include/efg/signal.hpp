#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efg/function.hpp"
#include "efg/rational.hpp"

namespace efg {

/*
 * An interval with rational endpoints, lo < hi.  The default is the
 * half-open [lo, hi); the closedness flags exist because preimages under
 * an order-reversing map turn [lo, hi) into (lo', hi'].
 */
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = false;

    bool contains(const Rational& x) const {
        const bool above = lo < x || (lo_closed && lo == x);
        const bool below = x < hi || (hi_closed && x == hi);
        return above && below;
    }
    bool half_open() const { return lo_closed && !hi_closed; }
    std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/*
 * A finitely-variable labelling of the real line: each predicate holds on
 * a finite union of intervals.  Instances built through normalize() (and
 * every loader) keep each predicate's intervals sorted, disjoint and
 * merged; predicates not mentioned are false everywhere.
 */
class Signal {
public:
    using Predicates = std::map<std::string, std::vector<Interval>>;

    Signal() = default;
    /// Normalizes the input; throws std::invalid_argument on lo >= hi.
    explicit Signal(Predicates preds);

    const Predicates& predicates() const { return preds_; }
    bool empty() const;

    bool value_at(const std::string& pred, const Rational& x) const;
    /// All interval endpoints, sorted and deduplicated.
    std::vector<Rational> breakpoints() const;
    std::vector<std::string> predicate_names() const;

    Signal translated(const Rational& t) const;
    /// Pushes every interval through x -> factor * x, factor > 0.
    Signal scaled(const Rational& factor) const;
    /// Adds predicate `name` holding exactly at {x : P(f(x))}.
    Signal with_preimage(const std::string& pred, const std::string& name, const FunctionSpec& f) const;

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    Predicates preds_;
};

/// Merges overlapping or touching intervals; throws on an interval with lo >= hi.
Signal normalize(Signal::Predicates preds);

/// Image of the preimage {x : f(x) in iv}; f must be invertible.
Interval preimage(const Interval& iv, const FunctionSpec& f);

/*
 * True iff A on the closed window [lo, hi] coincides with B on
 * [lo + t, hi + t] after translating by t.
 */
bool agree_on_window(const Signal& a, const Signal& b, const Rational& lo, const Rational& hi,
                     const Rational& t);

}  // namespace efg
