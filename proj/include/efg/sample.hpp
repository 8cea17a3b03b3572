#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "efg/formula.hpp"
#include "efg/signal.hpp"

namespace efg {

/// Instance generators bound rationals to denominator <= den and magnitude <= span.
struct SignalShape {
    int den = 8;
    int span = 16;
    int max_intervals = 3;
    std::vector<std::string> predicates{"P"};
};

/// Uniform rational k/den with |k/den| <= span.
Rational random_rational(std::mt19937_64& rng, int den, int span);
Signal random_signal(std::mt19937_64& rng, const SignalShape& shape = {});

struct SentenceShape {
    int depth = 2;
    int max_power = 2;
    std::vector<std::string> predicates{"P", "Q"};
};

/// Random sentence with quantifier depth exactly shape.depth over variables x, y, z, ...
Formula random_sentence(std::mt19937_64& rng, const SentenceShape& shape = {});

}  // namespace efg
