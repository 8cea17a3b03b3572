#include "efg/linear.hpp"

#include <random>
#include <stdexcept>

#include "efg/evaluate.hpp"
#include "efg/sample.hpp"

namespace efg {

Rational fixed_point(const FunctionSpec& fn) { return fn.fixed_point(); }

Signal reflected(const Signal& s) {
    Signal::Predicates out;
    for (const auto& [name, ivs] : s.predicates()) {
        auto& dst = out[name];
        for (const auto& iv : ivs) dst.push_back({-iv.hi, -iv.lo, iv.hi_closed, iv.lo_closed});
    }
    return Signal(std::move(out));
}

namespace {

bool agree_at(const Signal& a, const Signal& b, const Rational& x) {
    for (const Signal* s : {&a, &b})
        for (const auto& name : s->predicate_names())
            if (a.value_at(name, x) != b.value_at(name, x)) return false;
    return true;
}

}  // namespace

MonotoneVerdict reduce_monotone(const Signal& a, const Signal& b, const FunctionSpec& fn, const GameSpec& spec,
                                const SolverOptions& opts) {
    if (!(Rational(0) < fn.a())) throw std::invalid_argument("reduce_monotone needs a > 0");
    MonotoneVerdict v;
    const Configuration empty{};
    if (fn.is_translation()) {
        const Rational& t = fn.b();
        if (t == Rational(0)) {
            v.route = MonotoneVerdict::Route::Direct;
            v.winner = GameSolver(a, b, spec, fn, opts).winner(empty);
            return v;
        }
        const Rational scale = Rational(1) / t.abs();
        const bool flip = t < Rational(0);
        v.route = flip ? MonotoneVerdict::Route::Reflected : MonotoneVerdict::Route::Rescaled;
        auto image = [&](const Signal& s) { return (flip ? reflected(s) : s).scaled(scale); };
        GameSpec scaled_spec = spec;
        if (spec.locality) scaled_spec.locality = *spec.locality * scale;
        v.winner = GameSolver(image(a), image(b), scaled_spec, FunctionSpec::successor(), opts).winner(empty);
        return v;
    }
    v.route = MonotoneVerdict::Route::Split;
    const Rational x = fn.fixed_point();
    SolverOptions lower = opts, upper = opts;
    lower.below = x;
    upper.above = x;
    v.lower = GameSolver(a, b, spec, fn, lower).winner(empty);
    v.upper = GameSolver(a, b, spec, fn, upper).winner(empty);
    v.fixed_point_agrees = agree_at(a, b, x);
    const bool dup = *v.lower == Player::Duplicator && *v.upper == Player::Duplicator && v.fixed_point_agrees;
    v.winner = dup ? Player::Duplicator : Player::Spoiler;
    return v;
}

std::string fresh_predicate_name(const std::string& pred) { return pred + "__f"; }

namespace {

Formula map_atoms(const Formula& f, const std::function<Formula(const Formula&)>& g) {
    switch (f.op()) {
        case Op::Not: return Formula::negation(map_atoms(f.child(), g));
        case Op::And: return Formula::conj(map_atoms(f.left(), g), map_atoms(f.right(), g));
        case Op::Or: return Formula::disj(map_atoms(f.left(), g), map_atoms(f.right(), g));
        case Op::Exists: return Formula::exists(f.name(), map_atoms(f.child(), g));
        case Op::Forall: return Formula::forall(f.name(), map_atoms(f.child(), g));
        default: return g(f);
    }
}

Formula map_terms(const Formula& f, const std::function<Term(const Term&)>& g) {
    return map_atoms(f, [&](const Formula& a) {
        switch (a.op()) {
            case Op::Less: return Formula::less(g(a.lhs()), g(a.rhs()));
            case Op::Eq: return Formula::eq(g(a.lhs()), g(a.rhs()));
            case Op::Pred: return Formula::pred(a.name(), g(a.term()));
            default: return a;
        }
    });
}

bool odd(int n) { return n % 2 != 0; }

Formula relativize(const Formula& f) {
    switch (f.op()) {
        case Op::Not: return Formula::negation(relativize(f.child()));
        case Op::And: return Formula::conj(relativize(f.left()), relativize(f.right()));
        case Op::Or: return Formula::disj(relativize(f.left()), relativize(f.right()));
        case Op::Exists: {
            const std::string& x = f.name();
            const Formula psi = relativize(f.child());
            const Formula cases = Formula::disj(Formula::disj(psi, substitute(psi, x, Term::app(1, x))),
                                                substitute(psi, x, Term::fixed_point()));
            return Formula::exists(x, Formula::conj(Formula::less(Term::fixed_point(), Term::variable(x)), cases));
        }
        case Op::Forall: throw std::logic_error("relativize expects desugared input");
        default: return f;
    }
}

// One rule application to an atom whose variables range over (x*, inf); nullopt if none applies.
std::optional<std::pair<std::string, Formula>> atom_rule(const Formula& a) {
    const bool less = a.op() == Op::Less;
    if (!less && a.op() != Op::Eq) return std::nullopt;
    const Term& l = a.lhs();
    const Term& r = a.rhs();
    const bool lx = l.is_fixed_point(), rx = r.is_fixed_point();
    if (lx && rx) return std::pair{"fixed-point-self", Formula::truth(!less)};
    if (!less) {
        if (lx || rx) return std::pair{"eq-fixed-point", Formula::truth(false)};
        if (odd(l.power) != odd(r.power)) return std::pair{"eq-mixed-parity", Formula::truth(false)};
        if (odd(l.power))
            return std::pair{"eq-both-odd", Formula::eq(Term::app(l.power - 1, l.var), Term::app(r.power - 1, r.var))};
        return std::nullopt;
    }
    // odd powers land in (-inf, x*), even powers in (x*, inf)
    if (lx) return odd(r.power) ? std::optional{std::pair{std::string("less-fixed-point-odd"), Formula::truth(false)}}
                                : std::nullopt;
    if (rx) return odd(l.power) ? std::optional{std::pair{std::string("odd-less-fixed-point"), Formula::truth(true)}}
                                : std::nullopt;
    if (odd(l.power) && odd(r.power))
        // f reverses the order
        return std::pair{"less-both-odd", Formula::less(Term::app(r.power - 1, r.var), Term::app(l.power - 1, l.var))};
    if (odd(l.power) != odd(r.power)) return std::pair{"less-mixed-parity", Formula::truth(odd(l.power))};
    return std::nullopt;
}

Formula fold_constants(const Formula& f) {
    switch (f.op()) {
        case Op::Not: {
            const Formula c = fold_constants(f.child());
            if (c.op() == Op::True) return Formula::truth(false);
            if (c.op() == Op::False) return Formula::truth(true);
            if (c.op() == Op::Not) return c.child();
            return Formula::negation(c);
        }
        case Op::And:
        case Op::Or: {
            const bool conj = f.op() == Op::And;
            const Formula l = fold_constants(f.left()), r = fold_constants(f.right());
            const Op absorbing = conj ? Op::False : Op::True;
            const Op neutral = conj ? Op::True : Op::False;
            if (l.op() == absorbing || r.op() == absorbing) return Formula::truth(!conj);
            if (l.op() == neutral) return r;
            if (r.op() == neutral) return l;
            return conj ? Formula::conj(l, r) : Formula::disj(l, r);
        }
        case Op::Exists:
        case Op::Forall: {
            const Formula c = fold_constants(f.child());
            if (c.op() == Op::True || c.op() == Op::False) return c;
            return f.op() == Op::Exists ? Formula::exists(f.name(), c) : Formula::forall(f.name(), c);
        }
        default: return f;
    }
}

std::string fresh_variable(const Formula& f) {
    const auto used = all_vars(f);
    for (const char* v : {"y", "z", "w", "v", "u", "t", "s", "r", "q"})
        if (!used.count(v)) return v;
    for (int i = 1;; ++i) {
        std::string v = "y" + std::to_string(i);
        if (!used.count(v)) return v;
    }
}

bool atom_has_fixed_point(const Formula& a) {
    switch (a.op()) {
        case Op::Less:
        case Op::Eq: return a.lhs().is_fixed_point() || a.rhs().is_fixed_point();
        case Op::Pred: return a.term().is_fixed_point();
        default: return false;
    }
}

void stage(RewriteTrace& t, const char* rule, const Formula& before, const Formula& after) {
    t.stages.push_back({rule, render(before), render(after)});
}

}  // namespace

Formula simplify_antitone_atoms(const Formula& f, std::vector<RewriteStep>* log) {
    const Formula out = map_atoms(f, [&](const Formula& a) {
        Formula cur = a;
        while (auto step = atom_rule(cur)) {
            if (log) log->push_back({step->first, render(cur), render(step->second)});
            cur = step->second;
        }
        return cur;
    });
    return fold_constants(out);
}

bool is_clean_antitone_output(const Formula& f) {
    if (contains_fixed_point(f)) return false;
    bool clean = true;
    map_terms(f, [&](const Term& t) {
        if (odd(t.power)) clean = false;
        return t;
    });
    return clean;
}

AntitoneRewrite antitone_rewrite(const Formula& phi, const FunctionSpec& fn) {
    if (fn.kind() != FunctionSpec::Kind::Antitone) throw std::invalid_argument("antitone_rewrite needs a < 0");
    if (!free_vars(phi).empty()) throw std::invalid_argument("antitone_rewrite expects a sentence");
    if (contains_fixed_point(phi)) throw std::invalid_argument("input already mentions x*");
    const auto preds = predicate_names(phi);
    AntitoneRewrite out;
    for (const auto& p : preds) {
        const std::string fresh = fresh_predicate_name(p);
        if (preds.count(fresh)) throw std::invalid_argument("fresh predicate name '" + fresh + "' already occurs");
        out.fresh.emplace_back(p, fresh);
    }
    RewriteTrace& trace = out.trace;

    const Formula desugared = desugar_forall(phi);
    stage(trace, "desugar-forall", phi, desugared);
    const Formula rel = relativize(desugared);
    stage(trace, "relativize", desugared, rel);
    const Formula collapsed = map_terms(rel, [](const Term& t) { return t.is_fixed_point() ? Term::fixed_point() : t; });
    stage(trace, "collapse-fixed-point", rel, collapsed);
    const Formula simplified = simplify_antitone_atoms(collapsed, &trace.atoms);
    stage(trace, "simplify-atoms", collapsed, simplified);
    const Formula folded = map_atoms(simplified, [](const Formula& a) {
        if (a.op() != Op::Pred || !odd(a.term().power)) return a;
        Term t = a.term();
        t.power -= 1;
        return Formula::pred(fresh_predicate_name(a.name()), t);
    });
    stage(trace, "fold-odd-predicates", simplified, folded);
    const std::string y = fresh_variable(folded);
    const Formula eliminated = fold_constants(map_atoms(folded, [&](const Formula& a) {
        if (!atom_has_fixed_point(a)) return a;
        // x* is the unique solution of y = f^2(y)
        const Formula body = map_terms(a, [&](const Term& t) { return t.is_fixed_point() ? Term::variable(y) : t; });
        return Formula::exists(y, Formula::conj(Formula::eq(Term::variable(y), Term::app(2, y)), body));
    }));
    stage(trace, "eliminate-fixed-point", folded, eliminated);
    out.formula = eliminated;
    out.over_square = map_terms(eliminated, [](const Term& t) {
        Term h = t;
        h.power /= 2;
        return h;
    });
    stage(trace, "halve-powers", eliminated, out.over_square);
    if (!is_clean_antitone_output(out.formula)) throw std::logic_error("antitone rewriting left x* or an odd power");
    return out;
}

Signal with_fresh_predicates(const Signal& s, const AntitoneRewrite& r, const FunctionSpec& fn) {
    Signal out = s;
    for (const auto& [p, fresh] : r.fresh) out = out.with_preimage(p, fresh, fn);
    return out;
}

std::size_t AntitoneReport::failures() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += t.agree() ? 0 : 1;
    return n;
}

AntitoneReport verify_antitone_equivalence(const Formula& phi, const FunctionSpec& fn, int trials, std::uint64_t seed) {
    AntitoneReport report;
    if (trials <= 0) return report;
    const AntitoneRewrite rw = antitone_rewrite(phi, fn);
    std::mt19937_64 rng(seed);
    SignalShape shape;
    const auto names = predicate_names(phi);
    shape.predicates.assign(names.begin(), names.end());
    for (int i = 0; i < trials; ++i) {
        AntitoneTrial t;
        t.index = static_cast<std::size_t>(i);
        t.signal = random_signal(rng, shape);
        t.original = evaluate(phi, t.signal, {}, fn);
        t.rewritten = evaluate(rw.over_square, with_fresh_predicates(t.signal, rw, fn), {}, fn.squared());
        report.trials.push_back(std::move(t));
    }
    return report;
}

}  // namespace efg
