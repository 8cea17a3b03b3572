#pragma once

#include <string>
#include <string_view>

#include "efg/rational.hpp"

namespace efg {

/*
 * A rational linear function f(x) = a*x + b.
 *
 * The kind tag classifies f by the shape of the structure (R, <, f):
 * translations (a = 1) are isomorphic to (R, <, +1) up to scaling,
 * monotone maps with a != 1 split at their fixed point, and antitone maps
 * (a < 0) swap the two sides of the fixed point.
 */
class FunctionSpec {
public:
    enum class Kind { Successor, Predecessor, Identity, Monotone, Antitone, Constant };

    FunctionSpec() : FunctionSpec(Rational(1), Rational(1)) {}
    FunctionSpec(Rational a, Rational b) : a_(a), b_(b) {}

    static FunctionSpec successor() { return {Rational(1), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Kind kind() const;

    bool is_translation() const { return a_ == Rational(1); }
    bool is_successor() const { return a_ == Rational(1) && b_ == Rational(1); }
    bool is_invertible() const { return a_ != Rational(0); }

    Rational apply(const Rational& x) const { return a_ * x + b_; }
    Rational apply_inverse(const Rational& x) const { return (x - b_) / a_; }
    /// f^n(x), n may be negative (inverse iterates).
    Rational iterate(const Rational& x, int n) const;

    /// f o f, coefficients (a^2, ab + b).
    FunctionSpec squared() const { return {a_ * a_, a_ * b_ + b_}; }

    bool has_fixed_point() const { return a_ != Rational(1); }
    /// b / (1 - a); throws std::domain_error when a = 1.
    Rational fixed_point() const;

    /// "a:b" using rational syntax for each coefficient.
    std::string str() const { return a_.str() + ":" + b_.str(); }
    /// Parses the CLI form "a/b:c/d" (either part may be an integer).
    static FunctionSpec parse(std::string_view text);

    friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;

private:
    Rational a_;
    Rational b_;
};

}  // namespace efg
