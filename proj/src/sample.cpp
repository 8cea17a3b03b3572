#include "efg/sample.hpp"

#include <algorithm>

namespace efg {

Rational random_rational(std::mt19937_64& rng, int den, int span) {
    std::uniform_int_distribution<std::int64_t> k(-static_cast<std::int64_t>(span) * den,
                                                  static_cast<std::int64_t>(span) * den);
    return Rational(k(rng), den);
}

Signal random_signal(std::mt19937_64& rng, const SignalShape& shape) {
    Signal::Predicates preds;
    std::uniform_int_distribution<int> count(0, shape.max_intervals);
    for (const auto& name : shape.predicates) {
        std::vector<Interval> ivs;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            Rational lo = random_rational(rng, shape.den, shape.span);
            Rational hi = random_rational(rng, shape.den, shape.span);
            if (lo == hi) continue;
            if (hi < lo) std::swap(lo, hi);
            ivs.push_back({lo, hi});
        }
        if (!ivs.empty()) preds[name] = std::move(ivs);
    }
    return Signal(std::move(preds));
}

namespace {

const char* const kVars[] = {"x", "y", "z", "w", "v", "u"};

class SentenceBuilder {
public:
    SentenceBuilder(std::mt19937_64& rng, const SentenceShape& shape) : rng_(rng), shape_(shape) {}

    Formula sentence() { return formula(shape_.depth, {}); }

private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    Term term(const std::vector<std::string>& bound) {
        return Term::app(pick(shape_.max_power + 1), bound[static_cast<std::size_t>(pick(static_cast<int>(bound.size())))]);
    }

    Formula atom(const std::vector<std::string>& bound) {
        switch (pick(3)) {
            case 0: return Formula::less(term(bound), term(bound));
            case 1: return Formula::eq(term(bound), term(bound));
            default:
                return Formula::pred(shape_.predicates[static_cast<std::size_t>(pick(static_cast<int>(shape_.predicates.size())))],
                                     term(bound));
        }
    }

    // quantifier depth exactly `depth`; atoms only under at least one quantifier
    Formula formula(int depth, std::vector<std::string> bound) {
        if (depth == 0) {
            Formula f = atom(bound);
            if (pick(3) == 0) f = Formula::conj(f, atom(bound));
            return pick(4) == 0 ? Formula::negation(f) : f;
        }
        const std::string var = kVars[bound.size() % std::size(kVars)];
        auto inner = bound;
        if (std::find(inner.begin(), inner.end(), var) == inner.end()) inner.push_back(var);
        Formula body = formula(depth - 1, inner);
        if (depth > 1 && pick(2) == 0) body = pick(2) ? Formula::conj(body, atom(inner)) : Formula::disj(body, atom(inner));
        Formula q = pick(2) ? Formula::exists(var, body) : Formula::forall(var, body);
        return pick(5) == 0 ? Formula::negation(q) : q;
    }

    std::mt19937_64& rng_;
    const SentenceShape& shape_;
};

}  // namespace

Formula random_sentence(std::mt19937_64& rng, const SentenceShape& shape) { return SentenceBuilder(rng, shape).sentence(); }

}  // namespace efg
