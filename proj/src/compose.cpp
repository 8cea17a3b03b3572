#include "efg/compose.hpp"

#include <algorithm>
#include <stdexcept>

namespace efg {

namespace {

Rational two_to(int n) { return pow2(n); }

Assignment slice(const Assignment& u, std::size_t from, std::size_t to) {
    return Assignment(u.begin() + static_cast<std::ptrdiff_t>(from), u.begin() + static_cast<std::ptrdiff_t>(to) + 1);
}

bool sorted(const Assignment& u) { return std::is_sorted(u.begin(), u.end()); }

}  // namespace

Assignment Decomposition::left(const Assignment& u) const { return slice(u, 0, l); }
Assignment Decomposition::middle(const Assignment& u) const { return slice(u, l, r); }
Assignment Decomposition::right(const Assignment& u) const { return slice(u, r, u.size() - 1); }
Configuration Decomposition::left(const Configuration& c) const { return {left(c.left), left(c.right)}; }
Configuration Decomposition::middle(const Configuration& c) const { return {middle(c.left), middle(c.right)}; }
Configuration Decomposition::right(const Configuration& c) const { return {right(c.left), right(c.right)}; }

ExtendedRational Decomposition::left_margin(const Assignment& u) const {
    if (l == 0) return ExtendedRational::pos_inf();
    return u[l] - u[l - 1];
}

ExtendedRational Decomposition::right_margin(const Assignment& u) const {
    if (r + 1 >= u.size()) return ExtendedRational::pos_inf();
    return u[r + 1] - u[r];
}

Decomposition decompose(const Configuration& c, int n) {
    c.check();
    if (c.size() != 3) throw std::invalid_argument("expected a 3-configuration");
    if (!sorted(c.left) || !sorted(c.right)) throw std::invalid_argument("assignments must be sorted");
    const Rational t = two_to(n);
    auto pattern = [&](const Assignment& u) { return std::pair{t < u[1] - u[0], t < u[2] - u[1]}; };
    const auto p = pattern(c.left);
    if (p != pattern(c.right))
        throw std::invalid_argument("gaps above 2^" + std::to_string(n) +
                                    " differ between the structures; Spoiler wins the n-round 3-pebble game");
    const auto [wide1, wide2] = p;
    if (!wide1 && !wide2) return {0, 2};
    if (wide1 && wide2) return {1, 1};
    if (!wide1) return {0, 1};
    return {1, 2};
}

bool satisfies_desiderata(const Configuration& c, const Decomposition& d, int n) {
    const Rational t = two_to(n);
    for (const Assignment* u : {&c.left, &c.right}) {
        if (two_to(n + 1) < diameter(d.middle(*u))) return false;
        if (!(ExtendedRational(t) < d.left_margin(*u)) || !(ExtendedRational(t) < d.right_margin(*u))) return false;
        if (d.left(*u).size() > 2 || d.right(*u).size() > 2) return false;
    }
    return true;
}

struct ComposedDuplicator::State {
    Play left, middle, right;
    Rational ul, ur, vl, vr;  // current boundaries
    int rounds_left = 0;
};

ComposedDuplicator::ComposedDuplicator(DuplicatorPtr left, DuplicatorPtr middle, DuplicatorPtr right,
                                       Configuration c, Decomposition d, int n, Rational locality)
    : left_(std::move(left)),
      middle_(std::move(middle)),
      right_(std::move(right)),
      start_(std::move(c)),
      d_(d),
      n_(n),
      locality_(locality) {
    start_.check();
    if (start_.size() == 0 || d_.l > d_.r || d_.r >= start_.size()) throw std::invalid_argument("bad decomposition");
    if (!sorted(start_.left) || !sorted(start_.right)) throw std::invalid_argument("assignments must be sorted");
    const ExtendedRational t(two_to(n));
    for (const Assignment* u : {&start_.left, &start_.right}) {
        if (!(t < d_.left_margin(*u)) || !(t < d_.right_margin(*u)))
            throw std::invalid_argument("margins must exceed 2^" + std::to_string(n));
        if (locality_ < diameter(d_.middle(*u)) + two_to(n + 1))
            throw std::invalid_argument("locality below diam(middle) + 2^(n+1)");
    }
}

ComposedDuplicator::Part ComposedDuplicator::route(const State& s, const Move& m) const {
    const Rational half = two_to(s.rounds_left - 1);
    const Rational& lo = m.side == Side::A ? s.ul : s.vl;
    const Rational& hi = m.side == Side::A ? s.ur : s.vr;
    if (m.point < lo - half) return Part::Left;
    if (hi + half < m.point) return Part::Right;
    return Part::Middle;
}

namespace {

Move fresh(const Play& p, Side side, const Rational& point) { return {side, p.current().size(), point}; }

void push(Play& p, Side side, const Rational& point, const Rational& response) {
    p.rounds.push_back({fresh(p, side, point), response});
}

}  // namespace

// Answers `m` from the routed sub-strategy and updates the sub-plays and boundaries.
Rational ComposedDuplicator::answer(State& s, const Move& m) const {
    const Part part = route(s, m);
    Play& sub = part == Part::Left ? s.left : part == Part::Right ? s.right : s.middle;
    const DuplicatorStrategy& strat = part == Part::Left ? *left_ : part == Part::Right ? *right_ : *middle_;
    const int used = static_cast<int>(sub.rounds.size());
    const int budget = part == Part::Middle ? 3 * n_ : n_;
    const Move local = fresh(sub, m.side, m.point);
    const Rational half = two_to(s.rounds_left - 1);
    const Rational lo = (m.side == Side::A ? s.vl : s.ul) - half;
    const Rational hi = (m.side == Side::A ? s.vr : s.ur) + half;
    // the response must stay on the routed side of the other structure's boundaries
    const auto inside = [&](const Rational& x) {
        switch (part) {
            case Part::Left: return x < lo;
            case Part::Right: return hi < x;
            case Part::Middle: return !(x < lo) && !(hi < x);
        }
        return false;
    };
    const Rational response = strat.respond_preferring(sub, budget - used, local, inside);
    sub.rounds.push_back({local, response});
    if (part == Part::Middle) {
        const Rational ul = s.ul - half, ur = s.ur + half, vl = s.vl - half, vr = s.vr + half;
        push(s.middle, Side::A, ul, vl);
        push(s.middle, Side::A, ur, vr);
        push(s.left, Side::A, ul, vl);
        push(s.right, Side::A, ur, vr);
        s.ul = ul;
        s.ur = ur;
        s.vl = vl;
        s.vr = vr;
    }
    --s.rounds_left;
    return response;
}

ComposedDuplicator::State ComposedDuplicator::replay(const Play& play) const {
    if (!(play.start == start_)) throw std::invalid_argument("play does not start at the composed configuration");
    State s;
    s.left = {d_.left(start_), {}};
    s.middle = {d_.middle(start_), {}};
    s.right = {d_.right(start_), {}};
    s.ul = start_.left[d_.l];
    s.ur = start_.left[d_.r];
    s.vl = start_.right[d_.l];
    s.vr = start_.right[d_.r];
    s.rounds_left = n_;
    for (const auto& round : play.rounds) {
        // the recorded response wins over a recomputed one
        const Part part = route(s, round.move);
        State copy = s;
        answer(copy, round.move);
        Play& sub = part == Part::Left ? copy.left : part == Part::Right ? copy.right : copy.middle;
        const std::size_t at = part == Part::Middle ? sub.rounds.size() - 3 : sub.rounds.size() - 1;
        sub.rounds[at].response = round.response;
        s = std::move(copy);
    }
    return s;
}

ComposedDuplicator::Part ComposedDuplicator::route(const Play& play, const Move& move) const {
    return route(replay(play), move);
}

Rational ComposedDuplicator::respond(const Play& play, int rounds_left, const Move& move) const {
    State s = replay(play);
    if (rounds_left != s.rounds_left) s.rounds_left = rounds_left;
    return answer(s, move);
}

std::optional<Rational> mirror_certificate(const Signal& a, const Signal& b, const Configuration& middle,
                                           const Rational& locality) {
    middle.check();
    if (middle.size() == 0) return std::nullopt;
    const Rational t = middle.right[0] - middle.left[0];
    for (std::size_t i = 0; i < middle.size(); ++i)
        if (middle.right[i] - middle.left[i] != t) return std::nullopt;
    const auto [mn, mx] = std::minmax_element(middle.left.begin(), middle.left.end());
    const Rational lo = *mx - locality, hi = *mn + locality;
    if (!agree_on_window(a, b, lo, hi, t)) return std::nullopt;
    return t;
}

ImplicationResult check_3pebble_to_unrestricted(const Signal& a, const Signal& b, const Configuration& c, int n,
                                                const SolverOptions& opts) {
    c.check();
    if (c.size() > 3) throw std::invalid_argument("at most 3 pebbles");
    if (n < 0 || 4 * n + 2 > 30) throw std::invalid_argument("round count out of range");
    ImplicationResult r;
    GameSolver unrestricted(a, b, {n, std::nullopt, std::nullopt}, FunctionSpec::successor(), opts);
    r.consequent = unrestricted.winner(c, n) == Player::Duplicator;
    if (*r.consequent) return r;
    const int rounds = 4 * n + 2;
    GameSolver pebble(a, b, {rounds, 3, std::nullopt}, FunctionSpec::successor(), opts);
    r.antecedent = true;
    for (int k = 0; k <= rounds && *r.antecedent; ++k) r.antecedent = pebble.winner(c, k) == Player::Duplicator;
    return r;
}

}  // namespace efg
