#include "efg/counterex.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace efg {

std::strong_ordering lex_compare(const Sequence& s, const Sequence& t) {
    if (s.empty() || t.empty()) throw std::invalid_argument("sequences must be nonempty");
    return std::lexicographical_compare_three_way(s.begin(), s.end(), t.begin(), t.end());
}

bool e_related(const Sequence& s, const Sequence& t) {
    if (s.empty() || t.empty()) throw std::invalid_argument("sequences must be nonempty");
    return s.back() == t.back();
}

SeqModel::SeqModel(int M, int L) : M_(M), L_(L) {
    if (M < 1 || L < 1) throw std::invalid_argument("M and L must be positive");
    double count = 0, layer = 1;
    for (int len = 1; len <= L; ++len) count += (layer *= 2 * M + 1);
    if (count > 1e6) throw std::invalid_argument("sequence model too large");
    std::vector<Sequence> frontier{{}};
    for (int len = 1; len <= L; ++len) {
        std::vector<Sequence> next;
        for (const auto& s : frontier)
            for (int x = -M; x <= M; ++x) {
                Sequence t = s;
                t.push_back(x);
                next.push_back(t);
            }
        elems_.insert(elems_.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(elems_.begin(), elems_.end(), [](const Sequence& a, const Sequence& b) { return lex_compare(a, b) < 0; });
}

std::optional<std::size_t> SeqModel::index_of(const Sequence& s) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), s,
                               [](const Sequence& a, const Sequence& b) { return lex_compare(a, b) < 0; });
    if (it == elems_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

PairModel::PairModel(SeqModel base) : base_(std::move(base)) {
    const std::size_t n = base_.size();
    // base indices are order ranks, so index pairs sort lexicographically
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            if (base_.class_of(s) == base_.class_of(t)) pairs_.emplace_back(s, t);
    g_.resize(pairs_.size());
    diag_.resize(n);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto [s, t] = pairs_[i];
        g_[i] = static_cast<std::size_t>(std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{t, s}) - pairs_.begin());
        if (s == t) diag_[s] = i;
    }
}

bool psi_eval(const PairModel& m, std::size_t x, std::size_t y) {
    // element indices are order ranks
    for (std::size_t u = x + 1; u < y; ++u) {
        const std::size_t gu = m.g(u);
        if (!(u < gu && gu < y)) continue;
        bool clear = true;
        for (std::size_t v = x + 1; v < u && clear; ++v) clear = !m.is_fixed(v);
        for (std::size_t v = gu + 1; v < y && clear; ++v) clear = !m.is_fixed(v);
        if (clear) return true;
    }
    return false;
}

InterpretationReport check_interpretations(const PairModel& m, std::size_t samples, std::uint64_t seed,
                                           const std::vector<int>& p_classes) {
    InterpretationReport r;
    const SeqModel& s = m.base();
    auto in_p = [&](std::size_t i) {
        return std::find(p_classes.begin(), p_classes.end(), s.class_of(i)) != p_classes.end();
    };
    auto pair_p = [&](std::size_t i) { return m.at(i).first == m.at(i).second && in_p(m.at(i).first); };
    auto record = [&](std::string atom, std::vector<std::size_t> args, bool src, bool img) {
        ++r.checked;
        if (src != img) r.failures.push_back({std::move(atom), std::move(args), src, img});
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_s(0, s.size() - 1), pick_p(0, m.size() - 1);
    for (std::size_t n = 0; n < samples; ++n) {
        // one-dimensional: s -> (s, s)
        const std::size_t a = pick_s(rng), b = pick_s(rng);
        const std::size_t x = m.diagonal(a), y = m.diagonal(b);
        record("S:x<y", {a, b}, a < b, x < y && m.is_fixed(x) && m.is_fixed(y));
        record("S:P(x)", {a}, in_p(a), pair_p(x));
        const bool e = s.class_of(a) == s.class_of(b);
        const bool via_psi = psi_eval(m, x, y) || psi_eval(m, y, x);
        ++r.e_pairs;
        r.e_agree += e == via_psi;
        r.e_agree_with_equality += e == (via_psi || x == y);
        if (e != via_psi && a != b) ++r.e_off_diagonal_failures;
        // two-dimensional: (s, t) -> the pair of coordinates, domain E
        const std::size_t p = pick_p(rng), q = pick_p(rng);
        const auto [p1, p2] = m.at(p);
        const auto [q1, q2] = m.at(q);
        record("E:domain", {p}, true, s.class_of(p1) == s.class_of(p2));
        record("E:x<y", {p, q}, p < q, p1 < q1 || (p1 == q1 && p2 < q2));
        record("E:x=y", {p, q}, p == q, p1 == q1 && p2 == q2);
        record("E:x=g(y)", {p, q}, p == m.g(q), p1 == q2 && p2 == q1);
        record("E:P(x)", {p}, pair_p(p), p1 == p2 && in_p(p1));
    }
    return r;
}

FiniteStructure labelled(const SeqModel& m, const std::vector<int>& p_classes) {
    FiniteStructure f;
    for (std::size_t i = 0; i < m.size(); ++i) {
        f.cls.push_back(m.class_of(i));
        const bool p = std::find(p_classes.begin(), p_classes.end(), m.class_of(i)) != p_classes.end();
        f.preds.push_back(p ? 1u : 0u);
    }
    return f;
}

FiniteGame::FiniteGame(FiniteStructure a, FiniteStructure b, int pebbles)
    : a_(std::move(a)), b_(std::move(b)), pebbles_(pebbles) {
    if (pebbles < 1) throw std::invalid_argument("pebble bound must be positive");
    for (const FiniteStructure* s : {&a_, &b_}) {
        if (s->preds.size() != s->size()) throw std::invalid_argument("predicate masks must cover every element");
        if (!s->fn.empty() && s->fn.size() != s->size()) throw std::invalid_argument("function must be total");
    }
    if (a_.fn.empty() != b_.fn.empty()) throw std::invalid_argument("both structures need the same signature");
}

// (u, v) joined to c without pebble `skip` is a partial isomorphism, given c is one.
bool FiniteGame::compatible(const Config& c, std::size_t skip, std::size_t u, std::size_t v) const {
    if (a_.preds[u] != b_.preds[v]) return false;
    if (!a_.fn.empty() && ((a_.fn[u] == u) != (b_.fn[v] == v))) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == skip) continue;
        const auto [x, y] = c[i];
        if ((x < u) != (y < v) || (x == u) != (y == v)) return false;
        if ((a_.cls[x] == a_.cls[u]) != (b_.cls[y] == b_.cls[v])) return false;
        if (!a_.fn.empty() && ((a_.fn[x] == u) != (b_.fn[y] == v) || (a_.fn[u] == x) != (b_.fn[v] == y)))
            return false;
    }
    return true;
}

bool FiniteGame::spoiler_wins(const Config& raw, int rounds) {
    if (rounds <= 0) return false;
    Config c = raw;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const auto key = std::pair{c, rounds};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++nodes_;
    std::vector<std::size_t> labels;
    if (static_cast<int>(c.size()) < pebbles_) labels.push_back(c.size());
    for (std::size_t i = 0; i < c.size() && static_cast<int>(c.size()) >= pebbles_; ++i) labels.push_back(i);
    bool win = false;
    for (std::size_t label : labels) {
        for (int side = 0; side < 2 && !win; ++side) {
            const std::size_t own = side == 0 ? a_.size() : b_.size();
            const std::size_t theirs = side == 0 ? b_.size() : a_.size();
            for (std::size_t p = 0; p < own && !win; ++p) {
                bool answered = false;
                for (std::size_t q = 0; q < theirs && !answered; ++q) {
                    const std::size_t u = side == 0 ? p : q, v = side == 0 ? q : p;
                    if (!compatible(c, label, u, v)) continue;
                    Config next = c;
                    if (label == c.size()) next.emplace_back(u, v);
                    else next[label] = {u, v};
                    answered = !spoiler_wins(next, rounds - 1);
                }
                win = !answered;
            }
        }
        if (win) break;
    }
    memo_[key] = win;
    return win;
}

Player FiniteGame::winner(const Config& config, int rounds) {
    for (std::size_t i = 0; i < config.size(); ++i)
        if (!compatible(Config(config.begin(), config.begin() + static_cast<std::ptrdiff_t>(i)), config.size(),
                        config[i].first, config[i].second))
            return Player::Spoiler;
    return spoiler_wins(config, rounds) ? Player::Spoiler : Player::Duplicator;
}

Player FiniteGame::winner(int rounds) { return winner(Config{}, rounds); }

ExperimentResult inexpressibility_experiment(const SeqModel& m, int k, int rounds) {
    if (k < 1 || rounds < 0) throw std::invalid_argument("k must be positive and rounds non-negative");
    if (m.classes() < k + 2) throw std::invalid_argument("need 2M + 1 >= k + 2 classes");
    std::vector<int> ka, kb;
    for (int i = 0; i < k; ++i) ka.push_back(i);
    kb = ka;
    kb.push_back(k);
    const FiniteStructure a = labelled(m, ka), b = labelled(m, kb);
    ExperimentResult r;
    r.k = k;
    r.rounds = rounds;
    r.k_pebble = FiniteGame(a, b, k).winner(rounds);
    r.companion = FiniteGame(a, b, k + 1).winner(rounds + 1);
    r.identical = FiniteGame(a, a, k).winner(rounds);
    return r;
}

}  // namespace efg
