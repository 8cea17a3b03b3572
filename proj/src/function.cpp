#include "efg/function.hpp"

#include <stdexcept>

namespace efg {

FunctionSpec::Kind FunctionSpec::kind() const {
    if (a_ == Rational(0)) return Kind::Constant;
    if (a_ < Rational(0)) return Kind::Antitone;
    if (a_ != Rational(1)) return Kind::Monotone;
    if (b_ > Rational(0)) return Kind::Successor;
    if (b_ < Rational(0)) return Kind::Predecessor;
    return Kind::Identity;
}

Rational FunctionSpec::iterate(const Rational& x, int n) const {
    Rational y = x;
    if (is_translation()) return y + b_ * Rational(n);
    for (; n > 0; --n) y = apply(y);
    for (; n < 0; ++n) y = apply_inverse(y);
    return y;
}

Rational FunctionSpec::fixed_point() const {
    if (!has_fixed_point()) throw std::domain_error("f(x) = x + b has no unique fixed point");
    return b_ / (Rational(1) - a_);
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("function must be given as a:b, got '" + std::string(text) + "'");
    return {Rational::parse(text.substr(0, colon)), Rational::parse(text.substr(colon + 1))};
}

}  // namespace efg
