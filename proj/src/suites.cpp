#include "efg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "efg/compose.hpp"
#include "efg/counterex.hpp"
#include "efg/evaluate.hpp"
#include "efg/linear.hpp"
#include "efg/metric.hpp"
#include "efg/parser.hpp"
#include "efg/sample.hpp"
#include "efg/solver.hpp"

namespace efg {

json SuiteReport::to_json(bool with_time) const {
    json j{{"name", name}, {"instances", instances}, {"failures", json::array()}, {"notes", notes}};
    for (const auto& f : failures) j["failures"].push_back({{"index", f.index}, {"reason", f.reason}, {"witness", f.witness}});
    if (with_time) j["seconds"] = seconds;
    return j;
}

unsigned thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("EFGAME_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    const unsigned k = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(n, 1)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error) std::rethrow_exception(error);
}

namespace {

using Rng = std::mt19937_64;

struct Outcome {
    std::optional<SuiteFailure> failure;
    std::map<std::string, std::int64_t> tallies;
};

using InstanceFn = std::function<Outcome(std::size_t, Rng&)>;

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

SuiteFailure failure(std::size_t i, std::string reason, json witness) { return {i, std::move(reason), std::move(witness)}; }

json assignment_to_json(const Assignment& u) {
    json j = json::array();
    for (const auto& x : u) j.push_back(x.str());
    return j;
}

json game_witness(const Signal& a, const Signal& b, const Configuration& c) {
    return {{"a", signal_to_json(a)}, {"b", signal_to_json(b)}, {"configuration", configuration_to_json(c)}};
}

// A random member of the class of u: x -> s + floor(x - min) + g(frac(x - min)) for an
// increasing bijection g of [0, 1) fixing 0 with values in eighths.
Assignment random_equivalent(Rng& rng, const Assignment& u) {
    if (u.empty()) return u;
    const Rational base = *std::min_element(u.begin(), u.end());
    std::vector<Rational> fracs;
    for (const auto& x : u) fracs.push_back(frac(x - base));
    std::sort(fracs.begin(), fracs.end());
    fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
    std::vector<int> numer{1, 2, 3, 4, 5, 6, 7};
    std::shuffle(numer.begin(), numer.end(), rng);
    numer.resize(fracs.size() - 1);
    std::sort(numer.begin(), numer.end());
    const Rational shift = random_rational(rng, 8, 8);
    Assignment v;
    for (const auto& x : u) {
        const Rational d = x - base;
        const auto rank = static_cast<std::size_t>(std::lower_bound(fracs.begin(), fracs.end(), frac(d)) - fracs.begin());
        const Rational g = rank == 0 ? q(0) : q(numer[rank - 1], 8);
        v.push_back(shift + Rational(d.floor()) + g);
    }
    return v;
}

Assignment random_assignment(Rng& rng, std::size_t n, int den, int span) {
    Assignment u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(random_rational(rng, den, span));
    return u;
}

Signal similar_signal(Rng& rng, const Signal& a, int den) {
    // one endpoint moved by a multiple of 1/den, or a fresh short interval
    Signal::Predicates preds = a.predicates();
    if (preds.empty() || coin(rng)) {
        const Rational lo = random_rational(rng, den, 4);
        preds["P"].push_back({lo, lo + q(uniform(rng, 1, 2 * den), den)});
        return Signal(preds);
    }
    auto& ivs = preds.begin()->second;
    auto& iv = ivs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ivs.size()) - 1))];
    const Rational delta = q(uniform(rng, 1, den), den) * (coin(rng) ? q(1) : q(-1));
    if (coin(rng)) {
        if (iv.lo + delta < iv.hi) iv.lo += delta;
    } else if (iv.lo < iv.hi + delta) {
        iv.hi += delta;
    }
    return Signal(preds);
}

Signal game_signal(Rng& rng) { return random_signal(rng, {2, 4, 2, {"P"}}); }

// ---- criterion suites ----

const char* kFourOpen = "Ex2. Ex3. Ex4. (x4 < f(x1) & x1 < x2 & x2 < x3 & x3 < x4 & P(x2) & P(x3) & P(x4))";
const char* kThreeOpen = "Ey. (x < y & P(y) & Ez. (y < z & P(z) & Ey. (z < y & y < f(x) & P(y))))";

Outcome sec1(std::size_t i, Rng& rng) {
    static const Formula four = parse(std::string("Ax1. ") + kFourOpen), three = parse(std::string("Ax. ") + kThreeOpen);
    static const Formula four_open = parse(kFourOpen), three_open = parse(kThreeOpen);
    Outcome o;
    const Signal s = random_signal(rng, {8, 16, 4, {"P"}});
    const bool a = evaluate(four, s), b = evaluate(three, s);
    o.tallies["sentence_true"] = a;
    if (a != b) {
        o.failure = failure(i, "sentences disagree", {{"signal", signal_to_json(s)}});
        return o;
    }
    // the sentences are false on bounded support, so the bodies are also compared at free points
    for (int k = -17 * 16; k <= 17 * 16; ++k) {
        const Rational x(k, 16);
        const bool fa = evaluate(four_open, s, {{"x1", x}}), fb = evaluate(three_open, s, {{"x", x}});
        o.tallies["open_points"] += 1;
        o.tallies["open_true"] += fa;
        if (fa != fb) {
            o.failure = failure(i, "open forms disagree at x = " + x.str(), {{"signal", signal_to_json(s)}, {"x", x.str()}});
            return o;
        }
    }
    return o;
}

Outcome equiv(std::size_t i, Rng& rng) {
    Outcome o;
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const Assignment u = random_assignment(rng, n, 8, 8);
    Assignment v;
    switch (uniform(rng, 0, 2)) {
        case 0: v = random_assignment(rng, n, 8, 8); break;
        case 1: v = random_equivalent(rng, u); break;
        default:
            v = random_equivalent(rng, u);
            v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))] += q(uniform(rng, -8, 8), 8);
    }
    const bool floors = equiv_diff(u, v);
    const std::int64_t bound = (std::max(diameter(u), diameter(v))).floor() + 2;
    const bool def = equiv_diff_definitional(u, v, bound);
    o.tallies["equivalent"] = floors;
    json w{{"u", assignment_to_json(u)}, {"v", assignment_to_json(v)}};
    if (floors != def) {
        o.failure = failure(i, "floor table and difference constraints disagree", w);
        return o;
    }
    // ceilings follow from floors on the swapped pair
    if (floors)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if ((u[a] - u[b]).ceil() != (v[a] - v[b]).ceil()) {
                    o.failure = failure(i, "ceilings differ on an equivalent pair", w);
                    return o;
                }
    return o;
}

Outcome prop1(std::size_t i, Rng& rng) {
    Outcome o;
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const Assignment u = random_assignment(rng, n, 8, 8);
    const Assignment v = random_equivalent(rng, u);
    json w{{"u", assignment_to_json(u)}, {"v", assignment_to_json(v)}};
    if (!equiv_diff(u, v)) {
        o.failure = failure(i, "generator produced a non-equivalent pair", w);
        return o;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (frac_order(u, k) != frac_order(v, k)) {
            o.failure = failure(i, "frac orders differ for base " + std::to_string(k + 1), w);
            return o;
        }
    return o;
}

Assignment random_increasing(Rng& rng, std::size_t n) {
    std::vector<int> f;
    for (std::size_t k = 1; k < n; ++k) f.push_back(uniform(rng, 0, 7));
    std::sort(f.begin(), f.end());
    f.insert(f.begin(), 0);
    const Rational base = random_rational(rng, 8, 4);
    Assignment u;
    for (std::size_t k = 0; k < n; ++k) u.push_back(base + q(uniform(rng, -4, 4)) + q(f[k], 8));
    return u;
}

bool floor_additivity(const Assignment& u, std::size_t m) {
    for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t b = m + 1; b < u.size(); ++b)
            if ((u[b] - u[a]).floor() != (u[b] - u[m]).floor() + (u[m] - u[a]).floor()) return false;
    return true;
}

Outcome prop2(std::size_t i, Rng& rng) {
    Outcome o;
    for (int attempt = 0;; ++attempt) {
        const auto n = static_cast<std::size_t>(uniform(rng, 2, 5));
        const std::size_t m = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
        const auto cut = static_cast<std::ptrdiff_t>(m);
        const Assignment u = random_increasing(rng, n);
        const Assignment lu(u.begin(), u.begin() + cut + 1), ru(u.begin() + cut, u.end());
        Assignment v = random_equivalent(rng, lu);
        const Assignment right = random_equivalent(rng, ru);
        const Rational shift = v.back() - right.front();
        for (std::size_t k = 1; k < right.size(); ++k) v.push_back(right[k] + shift);
        // gluing two equivalent halves need not keep v increasing
        if (!is_increasing(v)) continue;
        o.tallies["rejected"] = attempt;
        json w{{"u", assignment_to_json(u)}, {"v", assignment_to_json(v)}, {"m", m + 1}};
        const Assignment lv(v.begin(), v.begin() + cut + 1), rv(v.begin() + cut, v.end());
        if (!is_increasing(u) || !equiv_diff(lu, lv) || !equiv_diff(ru, rv))
            o.failure = failure(i, "generator broke a premise", w);
        else if (!equiv_diff(u, v))
            o.failure = failure(i, "conclusion fails", w);
        else if (!floor_additivity(u, m) || !floor_additivity(v, m))
            o.failure = failure(i, "floor additivity fails", w);
        return o;
    }
}

Outcome prop3(std::size_t i, Rng& rng) {
    Outcome o;
    const int n = uniform(rng, 0, 4);
    const bool less = coin(rng);
    const Side side = coin(rng) ? Side::A : Side::B;
    const std::int64_t c = less ? uniform(rng, 0, (1 << n) - 1) : uniform(rng, 0, 1 << n);
    // the violating side satisfies d ~ c, the other side fails it
    Rational d_true, d_false;
    if (less) {
        d_true = q(c) - q(uniform(rng, 1, 16), 8);
        d_false = q(c) + q(uniform(rng, 0, 16), 8);
    } else {
        d_true = q(c);
        do d_false = q(c) + q(uniform(rng, -12, 12), 8);
        while (d_false == q(c));
    }
    const Rational a0 = random_rational(rng, 8, 4), b0 = random_rational(rng, 8, 4);
    const Assignment own{a0 + d_true, a0}, other{b0 + d_false, b0};
    const Configuration conf = side == Side::A ? Configuration{own, other} : Configuration{other, own};
    const MetricViolation root{side, 0, 1, less ? MetricViolation::Kind::Less : MetricViolation::Kind::Equal, c};
    json w{{"configuration", configuration_to_json(conf)}, {"rounds", n}, {"violation", root.str()}};
    GameSolver rules({}, {}, {n, 3, {}});
    o.tallies["n" + std::to_string(n)] = 1;
    if (!spoiler_strategy_wins(rules, conf, n, *spoiler_metric_strategy(conf, n, root)))
        o.failure = failure(i, "halving strategy does not win", w);
    return o;
}

Outcome cor1(std::size_t i, Rng& rng) {
    Outcome o;
    for (int attempt = 0;; ++attempt) {
        const int m = uniform(rng, 0, 3);
        const Rational span = pow2(m);
        Assignment u{random_rational(rng, 8, 4)};
        for (int k = 0; k < 2; ++k) u.push_back(u[0] + q(uniform(rng, -(8 << m), 8 << m), 8));
        if (span < diameter(u)) continue;
        Assignment v = random_equivalent(rng, u);
        if (coin(rng)) v[static_cast<std::size_t>(uniform(rng, 0, 2))] += q(uniform(rng, -8, 8), 8);
        else v = {v[0], v[0] + q(uniform(rng, -(8 << m) - 8, (8 << m) + 8), 8), v[0] + q(uniform(rng, -(8 << m) - 8, (8 << m) + 8), 8)};
        if (equiv_diff(u, v)) continue;
        const Configuration c{u, v};
        o.tallies["rejected"] = attempt;
        o.tallies["m" + std::to_string(m)] = 1;
        if (check_nonequiv_spoiler({}, {}, c, m)) return o;
        // the corrected bound: the rounds of the cheapest violation
        const auto vs = metric_violations(c);
        const int need = vs.empty() ? 0 : vs.front().rounds_needed();
        GameSolver s({}, {}, {need, 3, {}});
        const bool corrected = s.winner(c, need) == Player::Spoiler;
        o.tallies["corrected_bound_holds"] = corrected;
        o.failure = failure(i, "Spoiler does not win the " + std::to_string(m) + "-round 3-pebble game; cheapest violation " +
                                   (vs.empty() ? std::string("none") : vs.front().str()) + " needs " +
                                   std::to_string(need) + (corrected ? ", which suffices" : ", which does not suffice"),
                            {{"configuration", configuration_to_json(c)}, {"m", m}});
        return o;
    }
}

Configuration local_configuration(Rng& rng, const Rational& span, bool perturb) {
    for (;;) {
        Assignment u{random_rational(rng, 2, 3)};
        const int w = static_cast<int>((span * q(2)).floor());
        for (int k = 0; k < 2; ++k) u.push_back(u[0] + q(uniform(rng, -w, w), 2));
        Assignment v = u;
        if (perturb) v[static_cast<std::size_t>(uniform(rng, 0, 2))] += q(uniform(rng, -2, 2), 2);
        if (span < diameter(u) || span < diameter(v)) continue;
        return {u, v};
    }
}

Outcome prop4(std::size_t i, Rng& rng) {
    Outcome o;
    const int m = uniform(rng, 0, 2), n = uniform(rng, 0, 2);
    const Signal a = game_signal(rng);
    const Signal b = coin(rng) ? similar_signal(rng, a, 2) : game_signal(rng);
    const Configuration c = local_configuration(rng, pow2(m), coin(rng));
    const auto r = check_local_to_3pebble(a, b, c, m, n);
    o.tallies["spoiler_wins_local"] = r.antecedent == true;
    if (!r.holds()) {
        json w = game_witness(a, b, c);
        w["m"] = m;
        w["n"] = n;
        o.failure = failure(i, "Spoiler wins the local game but not the 3-pebble game", w);
    }
    return o;
}

// Sorted 3-assignment whose two gaps are small (<= 2^n) or wide (> 2^n) as requested.
Assignment gapped(Rng& rng, int n, bool wide1, bool wide2) {
    const int t = 2 << n;  // 2^n in halves
    auto gap = [&](bool wide) { return wide ? q(t + uniform(rng, 1, 8), 2) : q(uniform(rng, 1, t), 2); };
    const Rational u0 = random_rational(rng, 2, 3);
    const Rational u1 = u0 + gap(wide1);
    return {u0, u1, u1 + gap(wide2)};
}

Outcome lemma1(std::size_t i, Rng& rng) {
    Outcome o;
    for (int attempt = 0;; ++attempt) {
        const int n = uniform(rng, 0, 2);
        const bool w1 = coin(rng), w2 = coin(rng);
        const Assignment u = gapped(rng, n, w1, w2);
        const Rational t = q(uniform(rng, -6, 6), 2);
        Assignment v;
        for (const auto& x : u) v.push_back(x + t);
        // outer pebbles may move when their gap stays wide
        if (w1) v[0] += q(uniform(rng, -2, 2), 2);
        if (w2) v[2] += q(uniform(rng, -2, 2), 2);
        if (!std::is_sorted(v.begin(), v.end())) continue;
        const Configuration c{u, v};
        Decomposition d;
        try {
            d = decompose(c, n);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const Rational locality = std::max(diameter(d.middle(u)), diameter(d.middle(v))) + pow2(n + 1);
        const Signal a = game_signal(rng);
        Signal b = a.translated(t);
        if (coin(rng)) b = similar_signal(rng, b, 2);
        const auto shift = mirror_certificate(a, b, d.middle(c), locality);
        if (!shift) continue;
        auto left = std::make_shared<GameSolver>(a, b, GameSpec{n, {}, {}});
        auto right = std::make_shared<GameSolver>(a, b, GameSpec{n, {}, {}});
        if (left->winner(d.left(c)) != Player::Duplicator || right->winner(d.right(c)) != Player::Duplicator) continue;
        o.tallies["rejected"] = attempt;
        o.tallies["n" + std::to_string(n)] = 1;
        o.tallies["translate_b"] = b == a.translated(t);
        const ComposedDuplicator s(solver_duplicator(left), std::make_shared<MirrorStrategy>(*shift), solver_duplicator(right),
                                   c, d, n, locality);
        GameSolver rules(a, b, {n, {}, {}});
        if (!duplicator_strategy_survives(rules, c, n, s)) {
            json w = game_witness(a, b, c);
            w["n"] = n;
            w["decomposition"] = {d.l + 1, d.r + 1};
            w["locality"] = locality.str();
            o.failure = failure(i, "composed strategy loses", w);
        }
        return o;
    }
}

Outcome prop5(std::size_t i, Rng& rng) {
    Outcome o;
    for (int attempt = 0;; ++attempt) {
        const int n = uniform(rng, 0, 2);
        const Signal a = game_signal(rng);
        const Signal b = coin(rng) ? similar_signal(rng, a, 2) : game_signal(rng);
        const auto size = static_cast<std::size_t>(uniform(rng, 0, 3));
        Assignment u = random_assignment(rng, size, 2, 4);
        Assignment v = u;
        if (size > 0 && coin(rng)) v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(size) - 1))] += q(uniform(rng, -2, 2), 2);
        const Configuration c{u, v};
        if (!partial_isomorphism(c, a, b)) continue;
        o.tallies["rejected"] = attempt;
        const auto r = check_3pebble_to_unrestricted(a, b, c, n);
        o.tallies["spoiler_wins_unrestricted"] = r.consequent == false;
        if (!r.holds()) {
            json w = game_witness(a, b, c);
            w["n"] = n;
            o.failure = failure(i, "Duplicator wins the 3-pebble game but loses the unrestricted one", w);
        }
        return o;
    }
}

struct CorpusEntry {
    Signal a, b;
    Configuration c;
    GameSpec spec;
};

// Fixed solve corpus: the documented examples plus seeded random games.
std::vector<CorpusEntry> stability_corpus() {
    const Signal p1({{"P", {Interval{q(0), q(1)}}}}), p2({{"P", {Interval{q(0), q(2)}}}});
    std::vector<CorpusEntry> out{
        {p1, p2, {}, {2, 3, {}}},
        {p1, p2, {}, {1, 3, {}}},
        {p1, p1, {}, {2, 3, {}}},
        {p1, p2, {}, {2, {}, {}}},
        {p1, p2, {}, {3, {}, q(1, 2)}},
        {p1, p2, {}, {2, {}, q(1, 4)}},
        {{}, {}, {{q(5, 2), q(0)}, {q(7, 2), q(0)}}, {2, 3, {}}},
        {{}, {}, {{q(5, 2), q(0)}, {q(7, 2), q(0)}}, {1, 3, {}}},
        {{}, {}, {{q(0), q(1, 2), q(1, 4)}, {q(0), q(3, 2), q(1, 4)}}, {1, 3, {}}},
    };
    Rng rng(20260101);
    while (out.size() < 60) {
        CorpusEntry e;
        e.a = game_signal(rng);
        e.b = coin(rng) ? similar_signal(rng, e.a, 2) : game_signal(rng);
        const auto size = static_cast<std::size_t>(uniform(rng, 0, 2));
        e.c = {random_assignment(rng, size, 2, 2), {}};
        e.c.right = e.c.left;
        switch (uniform(rng, 0, 2)) {
            case 0: e.spec = {uniform(rng, 1, 2), 3, {}}; break;
            case 1: e.spec = {uniform(rng, 1, 2), {}, {}}; break;
            default: e.spec = {uniform(rng, 1, 2), {}, q(uniform(rng, 2, 4))};
        }
        if (e.spec.locality && *e.spec.locality < diameter(e.c.left)) continue;
        out.push_back(std::move(e));
    }
    return out;
}

Outcome stability(std::size_t i, Rng&) {
    static const std::vector<CorpusEntry> corpus = stability_corpus();
    Outcome o;
    const CorpusEntry& e = corpus[i % corpus.size()];
    SolverOptions fine;
    fine.discretization = Discretization::refined();
    const Player base = GameSolver(e.a, e.b, e.spec).winner(e.c);
    const Player refined = GameSolver(e.a, e.b, e.spec, FunctionSpec::successor(), fine).winner(e.c);
    o.tallies["spoiler"] = base == Player::Spoiler;
    if (base != refined) {
        json w = game_witness(e.a, e.b, e.c);
        w["spec"] = e.spec.str();
        o.failure = failure(i, "verdict flips under refinement: " + to_string(base) + " -> " + to_string(refined), w);
    }
    return o;
}

Outcome antitone(std::size_t i, Rng& rng) {
    Outcome o;
    const FunctionSpec fn{q(-2), q(0)};
    const Formula phi = random_sentence(rng, {uniform(rng, 1, 2), 2, {"P", "Q"}});
    json w{{"sentence", render(phi)}, {"fn", fn.str()}};
    const AntitoneRewrite r = antitone_rewrite(phi, fn);
    if (!is_clean_antitone_output(r.formula)) {
        o.failure = failure(i, "output keeps x* or an odd power", w);
        return o;
    }
    const auto report = verify_antitone_equivalence(phi, fn, 50, rng());
    o.tallies["trials"] = static_cast<std::int64_t>(report.trials.size());
    for (const auto& t : report.trials) o.tallies["original_true"] += t.original;
    for (const auto& t : report.trials)
        if (!t.agree()) {
            w["signal"] = signal_to_json(t.signal);
            w["original"] = t.original;
            o.failure = failure(i, "rewritten sentence disagrees", w);
            break;
        }
    return o;
}

Outcome sec6(std::size_t i, Rng&) {
    Outcome o;
    const SeqModel m(2, 2);
    const auto r = inexpressibility_experiment(m, 2, 2);
    o.tallies["k_pebble_duplicator"] = r.k_pebble == Player::Duplicator;
    o.tallies["companion_spoiler"] = r.companion == Player::Spoiler;
    o.tallies["identical_duplicator"] = r.identical == Player::Duplicator;
    const auto interp = check_interpretations(PairModel(SeqModel(1, 2)), 500);
    o.tallies["interpretation_failures"] = static_cast<std::int64_t>(interp.failures.size());
    o.tallies["e_pairs"] = static_cast<std::int64_t>(interp.e_pairs);
    o.tallies["e_agree"] = static_cast<std::int64_t>(interp.e_agree);
    o.tallies["e_agree_with_equality"] = static_cast<std::int64_t>(interp.e_agree_with_equality);
    if (r.k_pebble != Player::Duplicator || r.companion != Player::Spoiler || r.identical != Player::Duplicator)
        o.failure = failure(i, "verdicts differ from 2-pebble Duplicator / 3-pebble Spoiler",
                            {{"M", 2}, {"L", 2}, {"k", 2}, {"rounds", 2}});
    else if (!interp.failures.empty())
        o.failure = failure(i, "an interpretation atom disagrees", {{"atom", interp.failures.front().atom}});
    return o;
}

struct Suite {
    const char* name;
    std::size_t instances;
    InstanceFn run;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"sec1", 100, sec1},       {"equiv", 1000, equiv},    {"prop1", 500, prop1},
        {"prop2", 500, prop2},     {"prop3", 200, prop3},     {"cor1", 200, cor1},
        {"prop4", 200, prop4},     {"lemma1", 100, lemma1},   {"prop5", 200, prop5},
        {"stability", 60, stability}, {"sec5-antitone", 20, antitone}, {"sec6", 1, sec6},
    };
    return all;
}

const Suite& find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (name == s.name) return s;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : suites()) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

std::size_t default_instances(const std::string& name) { return find_suite(name).instances; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    const Suite& suite = find_suite(name);
    SuiteReport report;
    report.name = name;
    report.instances = opts.instances.value_or(suite.instances);
    std::vector<Outcome> outcomes(report.instances);
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t salt = std::hash<std::string>{}(name);
    parallel_for(report.instances, thread_count(opts.threads), [&](std::size_t i) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(i)};
        Rng rng(seq);
        outcomes[i] = suite.run(i, rng);
    });
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::map<std::string, std::int64_t> totals;
    for (auto& o : outcomes) {
        if (o.failure) report.failures.push_back(std::move(*o.failure));
        for (const auto& [k, v] : o.tallies) totals[k] += v;
    }
    for (const auto& [k, v] : totals) report.notes[k] = v;
    return report;
}

}  // namespace efg
