#include "efg/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace efg {

namespace {

const Assignment& side_of(const Configuration& c, Side s) { return s == Side::A ? c.left : c.right; }

Rational diameter_after(const Assignment& u, std::size_t label, const Rational& p) {
    Rational lo = p, hi = p;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == label) continue;
        lo = std::min(lo, u[i]);
        hi = std::max(hi, u[i]);
    }
    return hi - lo;
}

}  // namespace

CandidateSets candidate_moves(const Signal& a, const Signal& b, const Configuration& c, const GameSpec& spec,
                              const FunctionSpec& fn, const Discretization& d) {
    GameSolver s(a, b, spec, fn, {d, false});
    return {s.candidates(Side::A, c.left, spec.rounds), s.candidates(Side::B, c.right, spec.rounds)};
}

GameSolver::GameSolver(Signal a, Signal b, GameSpec spec, FunctionSpec fn, SolverOptions opts)
    : a_(std::move(a)), b_(std::move(b)), spec_(spec), fn_(fn), opts_(opts) {
    if (spec_.pebbles && *spec_.pebbles < 1) throw std::invalid_argument("pebble bound must be positive");
    if (spec_.locality && !(Rational(0) < *spec_.locality)) throw std::invalid_argument("locality must be positive");
    bp_a_ = a_.breakpoints();
    bp_b_ = b_.breakpoints();
    // a bounded domain breaks translation invariance
    const bool invariant = fn_.is_translation() && !opts_.above && !opts_.below;
    canon_a_ = a_.empty() && invariant;
    canon_b_ = b_.empty() && invariant;
    step_ = fn_.b();
}

bool GameSolver::is_partial_isomorphism(const Configuration& c) const {
    return partial_isomorphism(c, a_, b_, fn_);
}

std::vector<Rational> GameSolver::candidates(Side s, const Assignment& pebbles, int rounds,
                                             std::optional<std::size_t> replaced) const {
    const auto& bp = s == Side::A ? bp_a_ : bp_b_;
    std::vector<Rational> anchors = bp;
    anchors.insert(anchors.end(), pebbles.begin(), pebbles.end());
    const int h = horizon_for(rounds, opts_.discretization);
    std::optional<Rational> lo, hi;
    if (spec_.locality) {
        // union over the allowed labels of [max(rest) - D, min(rest) + D], rest = pebbles that stay
        const std::size_t n = pebbles.size();
        std::vector<std::size_t> labels;
        if (replaced) {
            labels.push_back(*replaced);
        } else {
            if (!spec_.pebbles || static_cast<int>(n) < *spec_.pebbles) labels.push_back(n);
            for (std::size_t i = 0; i < n; ++i) labels.push_back(i);
        }
        bool bounded = !labels.empty();
        for (std::size_t label : labels) {
            std::optional<Rational> mn, mx;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == label) continue;
                if (!mn || pebbles[i] < *mn) mn = pebbles[i];
                if (!mx || *mx < pebbles[i]) mx = pebbles[i];
            }
            if (!mn) {
                bounded = false;
                break;
            }
            const Rational l = *mx - *spec_.locality, u = *mn + *spec_.locality;
            if (!lo || l < *lo) lo = l;
            if (!hi || *hi < u) hi = u;
        }
        if (!bounded) lo = hi = std::nullopt;
    }
    if (opts_.above && (!lo || *lo < *opts_.above)) lo = opts_.above;
    if (opts_.below && (!hi || *opts_.below < *hi)) hi = opts_.below;
    auto out = candidate_points(anchors, h, fn_, opts_.discretization.subdivisions, lo, hi);
    std::erase_if(out, [&](const Rational& x) { return !opts_.in_domain(x); });
    return out;
}

bool GameSolver::legal_move(const Configuration& c, const Move& m) const {
    const std::size_t n = c.size();
    if (m.label > n) return false;
    if (m.label == n) {
        if (spec_.pebbles && static_cast<int>(n) >= *spec_.pebbles) return false;
    } else if (!spec_.reuse_allowed()) {
        return false;
    }
    if (spec_.locality && *spec_.locality < diameter_after(side_of(c, m.side), m.label, m.point)) return false;
    return opts_.in_domain(m.point);
}

bool GameSolver::legal_response(const Configuration& c, const Move& m, const Rational& response) const {
    if (!opts_.in_domain(response)) return false;
    if (!spec_.locality) return true;
    return !(*spec_.locality < diameter_after(side_of(c, other(m.side)), m.label, response));
}

bool GameSolver::survives(const Configuration& c, const Move& m, const Rational& response) const {
    if (!legal_move(c, m) || !legal_response(c, m, response)) return false;
    const Rational& u = m.side == Side::A ? m.point : response;
    const Rational& v = m.side == Side::A ? response : m.point;
    std::optional<std::size_t> skip;
    if (m.label < c.size()) skip = m.label;
    return extends_partial_isomorphism(c.left, c.right, u, v, a_, b_, fn_, skip);
}

std::size_t GameSolver::KeyHash::operator()(const Pairs& p) const noexcept {
    std::size_t h = p.size();
    RationalHash rh;
    for (const auto& [u, v] : p) {
        h = h * 0x100000001B3ULL ^ rh(u);
        h = h * 0x100000001B3ULL ^ rh(v);
    }
    return h;
}

Configuration GameSolver::canonical(const Configuration& c) const {
    Configuration out = c;
    if (canon_a_) out.left = canonical_difference_type(c.left, step_);
    if (canon_b_) out.right = canonical_difference_type(c.right, step_);
    return out;
}

GameSolver::Pairs GameSolver::key(const Configuration& c) const {
    Pairs p;
    p.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) p.emplace_back(c.left[i], c.right[i]);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

std::vector<Move> GameSolver::spoiler_moves(const Configuration& c, int rounds) const {
    std::vector<Move> out;
    for (Side s : {Side::A, Side::B}) {
        for (const auto& p : candidates(s, side_of(c, s), rounds)) {
            for (std::size_t label = 0; label <= c.size(); ++label) {
                Move m{s, label, p};
                if (legal_move(c, m)) out.push_back(m);
            }
        }
    }
    return out;
}

std::vector<Rational> GameSolver::mirror_points(const Configuration& c, const Move& m) const {
    const Assignment& own = side_of(c, m.side);
    const Assignment& oth = side_of(c, other(m.side));
    std::vector<std::pair<Rational, Rational>> byd;  // (distance, point)
    for (std::size_t i = 0; i < own.size(); ++i) {
        if (i == m.label) continue;
        const Rational d = m.point - own[i];
        byd.emplace_back(d.abs(), oth[i] + d);
    }
    std::sort(byd.begin(), byd.end());
    std::vector<Rational> out;
    for (const auto& [d, q] : byd) out.push_back(q);
    return out;
}

std::vector<Rational> GameSolver::responses(const Configuration& c, int rounds, const Move& m) const {
    std::vector<Rational> out = candidates(other(m.side), side_of(c, other(m.side)), rounds, m.label);
    if (opts_.mirror_responses) {
        const auto mp = mirror_points(c, m);
        out.insert(out.end(), mp.begin(), mp.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    std::erase_if(out, [&](const Rational& q) { return !legal_response(c, m, q); });
    return out;
}

// Search order: points splitting a pebble gap in half, then integer translates of
// pebbles by increasing offset, then the rest.
std::vector<Move> GameSolver::ordered_moves(const Configuration& c, int rounds) const {
    struct Ranked {
        int rank;
        int side;
        std::size_t index;
        Move move;
    };
    std::vector<Ranked> ranked;
    for (Side s : {Side::A, Side::B}) {
        const Assignment& own = side_of(c, s);
        std::set<Rational> halves;
        for (std::size_t i = 0; i < own.size(); ++i) {
            for (std::size_t j = 0; j < own.size(); ++j) {
                if (!(own[j] < own[i])) continue;
                const Rational d = own[i] - own[j];
                const Rational half = d / Rational(2);
                const std::int64_t next = d.floor() + 1;
                for (std::int64_t k : {half.floor(), half.ceil(), next - next / 2}) {
                    halves.insert(own[j] + Rational(k));
                    halves.insert(own[i] - Rational(k));
                }
            }
        }
        const auto pts = candidates(s, own, rounds);
        for (std::size_t idx = 0; idx < pts.size(); ++idx) {
            const Rational& p = pts[idx];
            int rank = 1 << 20;
            if (halves.count(p)) {
                rank = 0;
            } else {
                for (const auto& q : own) {
                    const Rational d = p - q;
                    if (d.is_integer() && d.abs() < Rational(1 << 19))
                        rank = std::min<int>(rank, 1 + static_cast<int>(d.abs().num()));
                }
            }
            for (std::size_t label = c.size() + 1; label-- > 0;) {
                Move m{s, label, p};
                if (legal_move(c, m)) ranked.push_back({rank, static_cast<int>(s), idx, m});
            }
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
        return std::tie(x.rank, x.index, x.side) < std::tie(y.rank, y.index, y.side);
    });
    std::vector<Move> out;
    out.reserve(ranked.size());
    for (auto& r : ranked) out.push_back(r.move);
    return out;
}

// Mirror points first, then the candidates by increasing distance from the nearest mirror point.
std::vector<Rational> GameSolver::ordered_responses(const Configuration& c, int rounds, const Move& m,
                                                    ResponseCache& cache) const {
    const Side s = other(m.side);
    const std::size_t label = spec_.locality ? m.label : std::size_t(-1);
    auto it = cache.find({static_cast<int>(s), label});
    if (it == cache.end()) {
        auto pts = candidates(s, side_of(c, s), rounds, spec_.locality ? std::optional(m.label) : std::nullopt);
        it = cache.emplace(std::pair{static_cast<int>(s), label}, std::move(pts)).first;
    }
    const std::vector<Rational>& base = it->second;
    std::vector<Rational> mp;
    if (opts_.mirror_responses) mp = mirror_points(c, m);
    std::vector<Rational> out;
    out.reserve(base.size() + mp.size());
    for (const auto& q : mp)
        if (std::find(out.begin(), out.end(), q) == out.end() && legal_response(c, m, q)) out.push_back(q);
    auto is_mirror = [&](const Rational& q) { return std::find(mp.begin(), mp.end(), q) != mp.end(); };
    auto emit = [&](const Rational& q) {
        if (!is_mirror(q) && legal_response(c, m, q)) out.push_back(q);
    };
    if (mp.empty()) {
        for (const auto& q : base) emit(q);
        return out;
    }
    const Rational& target = mp.front();
    std::size_t hi = std::lower_bound(base.begin(), base.end(), target) - base.begin();
    std::size_t lo = hi;
    while (lo > 0 || hi < base.size()) {
        if (hi < base.size() && (lo == 0 || base[hi] - target <= target - base[lo - 1]))
            emit(base[hi++]);
        else
            emit(base[--lo]);
    }
    return out;
}

bool GameSolver::spoiler_wins(const Configuration& original, int rounds) {
    if (rounds <= 0) return false;
    const Configuration c = canonical(original);
    const Pairs k = key(c);
    if (auto it = memo_.find(k); it != memo_.end()) {
        if (rounds >= it->second.spoiler_min) {
            ++stats_.memo_hits;
            return true;
        }
        if (rounds <= it->second.duplicator_max) {
            ++stats_.memo_hits;
            return false;
        }
    }
    ++stats_.nodes;
    bool result = false;
    ResponseCache cache;
    for (const auto& m : ordered_moves(c, rounds)) {
        if (!duplicator_survives(c, rounds, m, cache)) {
            result = true;
            break;
        }
    }
    Entry& e = memo_[k];
    if (result)
        e.spoiler_min = std::min(e.spoiler_min, rounds);
    else
        e.duplicator_max = std::max(e.duplicator_max, rounds);
    return result;
}

bool GameSolver::duplicator_survives(const Configuration& c, int rounds, const Move& m, ResponseCache& cache) {
    for (const auto& q : ordered_responses(c, rounds, m, cache)) {
        if (!survives(c, m, q)) continue;
        if (!spoiler_wins(apply_round(c, m, q), rounds - 1)) return true;
    }
    return false;
}

Player GameSolver::winner(const Configuration& c, int rounds) {
    c.check();
    if (!is_partial_isomorphism(c)) return Player::Spoiler;
    return spoiler_wins(c, rounds) ? Player::Spoiler : Player::Duplicator;
}

std::optional<Move> GameSolver::winning_move(const Configuration& c, int rounds) {
    if (rounds <= 0 || !is_partial_isomorphism(c)) return std::nullopt;
    if (!spoiler_wins(c, rounds)) return std::nullopt;
    ResponseCache cache;
    for (const auto& m : spoiler_moves(c, rounds))
        if (!duplicator_survives(c, rounds, m, cache)) return m;
    return std::nullopt;
}

std::optional<Rational> GameSolver::winning_response(const Configuration& c, int rounds, const Move& m,
                                                     const std::function<bool(const Rational&)>& admit) {
    if (rounds <= 0 || !is_partial_isomorphism(c)) return std::nullopt;
    for (const auto& q : responses(c, rounds, m)) {
        if ((admit && !admit(q)) || !survives(c, m, q)) continue;
        if (!spoiler_wins(apply_round(c, m, q), rounds - 1)) return q;
    }
    return std::nullopt;
}

namespace {

class SolverSpoiler : public SpoilerStrategy {
public:
    explicit SolverSpoiler(SolverPtr s) : s_(std::move(s)) {}
    std::optional<Move> choose(const Play& play, int rounds_left) const override {
        const Configuration c = play.current();
        if (!s_->is_partial_isomorphism(c)) return std::nullopt;
        if (auto m = s_->winning_move(c, rounds_left)) return m;
        auto moves = s_->spoiler_moves(c, rounds_left);
        if (moves.empty()) return std::nullopt;
        return moves.front();
    }
    bool memoryless() const override { return true; }

private:
    SolverPtr s_;
};

class SolverDuplicator : public DuplicatorStrategy {
public:
    explicit SolverDuplicator(SolverPtr s) : s_(std::move(s)) {}
    Rational respond(const Play& play, int rounds_left, const Move& m) const override {
        const Configuration c = play.current();
        if (auto q = s_->winning_response(c, rounds_left, m)) return *q;
        return fallback(c, rounds_left, m);
    }
    Rational respond_preferring(const Play& play, int rounds_left, const Move& m,
                                const std::function<bool(const Rational&)>& prefer) const override {
        const Configuration c = play.current();
        if (auto q = s_->winning_response(c, rounds_left, m, prefer)) return *q;
        return respond(play, rounds_left, m);
    }
    bool memoryless() const override { return true; }

private:
    Rational fallback(const Configuration& c, int rounds_left, const Move& m) const {
        const auto rs = s_->responses(c, rounds_left, m);
        for (const auto& q : rs)
            if (s_->survives(c, m, q)) return q;
        return rs.empty() ? m.point : rs.front();
    }

    SolverPtr s_;
};

}  // namespace

SpoilerPtr solver_spoiler(SolverPtr solver) { return std::make_shared<SolverSpoiler>(std::move(solver)); }
DuplicatorPtr solver_duplicator(SolverPtr solver) { return std::make_shared<SolverDuplicator>(std::move(solver)); }

SolveResult solve(const Signal& a, const Signal& b, const Configuration& c, const GameSpec& spec,
                  const FunctionSpec& fn, const SolverOptions& opts) {
    c.check();
    if (spec.rounds < 0) throw std::invalid_argument("negative round count");
    if (spec.pebbles && static_cast<int>(c.size()) > *spec.pebbles)
        throw std::invalid_argument("configuration uses more pebbles than the game allows");
    if (spec.locality && (*spec.locality < diameter(c.left) || *spec.locality < diameter(c.right)))
        throw std::invalid_argument("configuration diameter exceeds the locality bound");

    SolveResult r;
    r.solver = std::make_shared<GameSolver>(a, b, spec, fn, opts);
    GameSolver& s = *r.solver;
    r.winner = s.winner(c, spec.rounds);
    r.spoiler = solver_spoiler(r.solver);
    r.duplicator = solver_duplicator(r.solver);
    r.candidate_count = s.candidates(Side::A, c.left, spec.rounds).size() +
                        s.candidates(Side::B, c.right, spec.rounds).size();

    Play play{c, {}};
    for (int left = spec.rounds; left > 0; --left) {
        const Configuration cur = play.current();
        if (!s.is_partial_isomorphism(cur)) break;
        auto m = r.spoiler->choose(play, left);
        if (!m) break;
        play.rounds.push_back({*m, r.duplicator->respond(play, left, *m)});
    }
    r.principal_variation = play.rounds;
    r.stats = s.stats();
    return r;
}

json move_to_json(const Move& m) {
    return {{"structure", to_string(m.side)}, {"pebble", m.label + 1}, {"point", m.point.str()}};
}

json configuration_to_json(const Configuration& c) {
    json l = json::array(), r = json::array();
    for (const auto& x : c.left) l.push_back(x.str());
    for (const auto& x : c.right) r.push_back(x.str());
    return {{"left", l}, {"right", r}};
}

Configuration configuration_from_json(const json& j) {
    Configuration c;
    if (j.is_null()) return c;
    for (const auto& x : j.at("left")) c.left.push_back(rational_from_json(x));
    for (const auto& x : j.at("right")) c.right.push_back(rational_from_json(x));
    c.check();
    return c;
}

json solve_report(const SolveResult& r, const GameSpec& spec) {
    json pv = json::array();
    for (const auto& round : r.principal_variation) {
        json m = move_to_json(round.move);
        m["response"] = round.response.str();
        pv.push_back(m);
    }
    return {{"schema", 1},
            {"winner", to_string(r.winner)},
            {"rounds", spec.rounds},
            {"pebbles", spec.pebbles ? json(*spec.pebbles) : json("unbounded")},
            {"locality", spec.locality ? json(spec.locality->str()) : json(nullptr)},
            {"candidate_set_size", r.candidate_count},
            {"nodes", r.stats.nodes},
            {"principal_variation", pv}};
}

namespace {

using ReplayKey = std::tuple<Assignment, Assignment, int>;

ReplayKey replay_key(const GameSolver& rules, const Configuration& c, int rounds, bool equivariant) {
    if (!equivariant) return {c.left, c.right, rounds};
    const Configuration k = rules.canonical(c);
    return {k.left, k.right, rounds};
}

bool spoiler_replay(GameSolver& rules, Play& play, int rounds, const SpoilerStrategy& s,
                    std::map<ReplayKey, bool>* memo) {
    const Configuration c = play.current();
    if (!rules.is_partial_isomorphism(c)) return true;
    if (rounds <= 0) return false;
    ReplayKey k = replay_key(rules, c, rounds, s.equivariant());
    if (memo)
        if (auto it = memo->find(k); it != memo->end()) return it->second;
    bool result = true;
    const auto m = s.choose(play, rounds);
    if (!m || !rules.legal_move(c, *m)) {
        result = false;
    } else {
        for (const auto& q : rules.responses(c, rounds, *m)) {
            if (!rules.survives(c, *m, q)) continue;
            play.rounds.push_back({*m, q});
            const bool won = spoiler_replay(rules, play, rounds - 1, s, memo);
            play.rounds.pop_back();
            if (!won) {
                result = false;
                break;
            }
        }
    }
    if (memo) memo->emplace(std::move(k), result);
    return result;
}

bool duplicator_replay(GameSolver& rules, Play& play, int rounds, const DuplicatorStrategy& d,
                       std::map<ReplayKey, bool>* memo) {
    const Configuration c = play.current();
    if (!rules.is_partial_isomorphism(c)) return false;
    if (rounds <= 0) return true;
    ReplayKey k = replay_key(rules, c, rounds, d.equivariant());
    if (memo)
        if (auto it = memo->find(k); it != memo->end()) return it->second;
    bool result = true;
    for (const auto& m : rules.spoiler_moves(c, rounds)) {
        const Rational q = d.respond(play, rounds, m);
        if (!rules.survives(c, m, q)) {
            result = false;
            break;
        }
        play.rounds.push_back({m, q});
        const bool ok = duplicator_replay(rules, play, rounds - 1, d, memo);
        play.rounds.pop_back();
        if (!ok) {
            result = false;
            break;
        }
    }
    if (memo) memo->emplace(std::move(k), result);
    return result;
}

}  // namespace

bool spoiler_strategy_wins(GameSolver& rules, const Configuration& start, int rounds, const SpoilerStrategy& s) {
    Play play{start, {}};
    std::map<ReplayKey, bool> memo;
    return spoiler_replay(rules, play, rounds, s, s.memoryless() ? &memo : nullptr);
}

bool duplicator_strategy_survives(GameSolver& rules, const Configuration& start, int rounds,
                                  const DuplicatorStrategy& d) {
    Play play{start, {}};
    std::map<ReplayKey, bool> memo;
    return duplicator_replay(rules, play, rounds, d, d.memoryless() ? &memo : nullptr);
}

}  // namespace efg
