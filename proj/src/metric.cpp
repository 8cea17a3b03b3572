#include "efg/metric.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace efg {

namespace {

const Assignment& side_of(const Configuration& c, Side s) { return s == Side::A ? c.left : c.right; }

bool satisfies(const Rational& d, MetricViolation::Kind k, std::int64_t c) {
    return k == MetricViolation::Kind::Less ? d < Rational(c) : d == Rational(c);
}

std::int64_t two_to(int n) { return std::int64_t{1} << n; }

}  // namespace

int MetricViolation::rounds_needed() const {
    int n = 0;
    if (kind == Kind::Less)
        while (!(c < two_to(n))) ++n;
    else
        while (c > two_to(n)) ++n;
    return c == 0 ? 0 : n;
}

bool MetricViolation::holds(const Configuration& conf) const {
    const Assignment& own = side_of(conf, side);
    const Assignment& oth = side_of(conf, other(side));
    if (i >= own.size() || j >= own.size() || i == j || c < 0) return false;
    return satisfies(own[i] - own[j], kind, c) && !satisfies(oth[i] - oth[j], kind, c);
}

std::string MetricViolation::str() const {
    return to_string(side) + ": x" + std::to_string(i + 1) + " - x" + std::to_string(j + 1) +
           (kind == Kind::Less ? " < " : " = ") + std::to_string(c);
}

std::vector<MetricViolation> metric_violations(const Configuration& conf) {
    conf.check();
    std::vector<MetricViolation> out;
    for (Side s : {Side::A, Side::B}) {
        const Assignment& own = side_of(conf, s);
        const Assignment& oth = side_of(conf, other(s));
        for (std::size_t i = 0; i < own.size(); ++i) {
            for (std::size_t j = 0; j < own.size(); ++j) {
                if (i == j) continue;
                const Rational du = own[i] - own[j], dv = oth[i] - oth[j];
                // least non-negative c with du < c <= dv
                const std::int64_t c = std::max<std::int64_t>(0, du.floor() + 1);
                if (!(dv < Rational(c))) out.push_back({s, i, j, MetricViolation::Kind::Less, c});
                if (du.is_integer() && !(du < Rational(0)) && du != dv)
                    out.push_back({s, i, j, MetricViolation::Kind::Equal, du.floor()});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const MetricViolation& x, const MetricViolation& y) {
        return std::make_tuple(x.rounds_needed(), static_cast<int>(x.side), x.c, x.i, x.j, static_cast<int>(x.kind)) <
               std::make_tuple(y.rounds_needed(), static_cast<int>(y.side), y.c, y.i, y.j, static_cast<int>(y.kind));
    });
    return out;
}

namespace {

class MetricSpoiler : public SpoilerStrategy {
public:
    explicit MetricSpoiler(std::optional<MetricViolation> root) : root_(root) {}

    std::optional<Move> choose(const Play& play, int rounds_left) const override {
        const Configuration c = play.current();
        std::optional<MetricViolation> v;
        if (root_ && play.rounds.empty() && root_->holds(c)) {
            v = root_;
        } else {
            const auto all = metric_violations(c);
            if (!all.empty()) v = all.front();
        }
        if (!v || v->rounds_needed() == 0 || rounds_left <= 0) return std::nullopt;
        const std::int64_t half = v->c / 2;
        const Rational point = side_of(c, v->side)[v->i] - Rational(v->c - half);
        std::size_t label = c.size();
        if (c.size() >= 3) {
            label = 0;
            while (label == v->i || label == v->j) ++label;
        }
        return Move{v->side, label, point};
    }
    bool memoryless() const override { return !root_; }
    bool equivariant() const override { return !root_; }

private:
    std::optional<MetricViolation> root_;
};

}  // namespace

SpoilerPtr spoiler_metric_strategy(std::optional<MetricViolation> root) {
    return std::make_shared<MetricSpoiler>(root);
}

SpoilerPtr spoiler_metric_strategy(const Configuration& c, int n, const MetricViolation& root) {
    c.check();
    if (c.size() != 2) throw std::invalid_argument("the halving strategy starts from a 2-configuration");
    if (!root.holds(c)) throw std::invalid_argument("no violation " + root.str() + " in the configuration");
    if (root.rounds_needed() > n)
        throw std::invalid_argument("violation constant " + std::to_string(root.c) + " too large for " +
                                    std::to_string(n) + " rounds");
    return spoiler_metric_strategy(root);
}

bool check_nonequiv_spoiler(const Signal& a, const Signal& b, const Configuration& c, int m,
                            const SolverOptions& opts) {
    c.check();
    if (c.size() != 3) throw std::invalid_argument("expected a 3-configuration");
    if (m < 0 || m > 20) throw std::invalid_argument("round count out of range");
    if (equiv_diff(c.left, c.right)) throw std::invalid_argument("assignments are equivalent");
    const Rational bound(two_to(m));
    if (bound < std::min(diameter(c.left), diameter(c.right)))
        throw std::invalid_argument("both diameters exceed 2^" + std::to_string(m));
    GameSolver s(a, b, {m, 3, {}}, FunctionSpec::successor(), opts);
    for (int r = 0; r <= m; ++r)
        if (s.winner(c, r) == Player::Spoiler) return true;
    return false;
}

ImplicationResult check_local_to_3pebble(const Signal& a, const Signal& b, const Configuration& c, int m, int n,
                                         const SolverOptions& opts) {
    c.check();
    if (m < 0 || m > 20 || n < 0) throw std::invalid_argument("round counts out of range");
    const Rational d(two_to(m));
    if (d < diameter(c.left) || d < diameter(c.right))
        throw std::invalid_argument("diameter exceeds 2^" + std::to_string(m));
    ImplicationResult r;
    GameSolver local(a, b, {n, std::nullopt, d}, FunctionSpec::successor(), opts);
    r.antecedent = local.winner(c, n) == Player::Spoiler;
    if (!*r.antecedent) return r;
    GameSolver pebble(a, b, {m + n, 3, {}}, FunctionSpec::successor(), opts);
    r.consequent = false;
    for (int k = 0; k <= m + n && !*r.consequent; ++k) r.consequent = pebble.winner(c, k) == Player::Spoiler;
    return r;
}

}  // namespace efg
