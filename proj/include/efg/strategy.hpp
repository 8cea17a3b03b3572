#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "efg/config.hpp"

namespace efg {

/*
 * Strategies see the whole play so far, so a strategy can keep structure
 * that the configuration alone does not show (the composition of
 * sub-strategies does).  A strategy that only looks at the current
 * configuration reports memoryless() == true, which lets replays share
 * work between transposed plays.  equivariant() additionally promises
 * that the choice commutes with automorphisms of an empty structure, so
 * replays may merge plays with the same canonical_difference_type.
 */
class SpoilerStrategy {
public:
    virtual ~SpoilerStrategy() = default;
    /// nullopt means the current configuration is already not a partial isomorphism.
    virtual std::optional<Move> choose(const Play& play, int rounds_left) const = 0;
    virtual bool memoryless() const { return false; }
    virtual bool equivariant() const { return false; }
};

class DuplicatorStrategy {
public:
    virtual ~DuplicatorStrategy() = default;
    virtual Rational respond(const Play& play, int rounds_left, const Move& move) const = 0;
    /// Like respond, but a winning response satisfying `prefer` is chosen when one exists.
    virtual Rational respond_preferring(const Play& play, int rounds_left, const Move& move,
                                        const std::function<bool(const Rational&)>& prefer) const {
        (void)prefer;
        return respond(play, rounds_left, move);
    }
    virtual bool memoryless() const { return false; }
    virtual bool equivariant() const { return false; }
};

using SpoilerPtr = std::shared_ptr<const SpoilerStrategy>;
using DuplicatorPtr = std::shared_ptr<const DuplicatorStrategy>;

/// Duplicator answers u' in A with u' + t in B (and v' in B with v' - t).
class MirrorStrategy : public DuplicatorStrategy {
public:
    explicit MirrorStrategy(Rational shift) : shift_(shift) {}
    Rational respond(const Play&, int, const Move& m) const override {
        return m.side == Side::A ? m.point + shift_ : m.point - shift_;
    }
    bool memoryless() const override { return true; }

private:
    Rational shift_;
};

}  // namespace efg
