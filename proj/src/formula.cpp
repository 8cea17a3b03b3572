#include "efg/formula.hpp"

#include <algorithm>

namespace efg {

namespace detail {

struct Node {
    Op op;
    Term t1;
    Term t2;
    std::string name;
    Formula a;
    Formula b;
};

}  // namespace detail

namespace {

const Formula& placeholder() {
    static const Formula f = Formula::truth(true);
    return f;
}

}  // namespace

Term Term::app(int power, std::string name) {
    if (power < 0) throw std::invalid_argument("negative f-power");
    if (name.empty()) throw std::invalid_argument("empty variable name");
    return {Base::Var, std::move(name), power};
}

std::string Term::str() const {
    const std::string inner = base == Base::FixedPoint ? "x*" : var;
    if (power == 0) return inner;
    if (power == 1) return "f(" + inner + ")";
    return "f^" + std::to_string(power) + "(" + inner + ")";
}

// Leaf nodes hold a self-referencing placeholder in a/b; never read for atoms.
Formula Formula::truth(bool value) {
    static const Formula t(std::make_shared<detail::Node>(detail::Node{Op::True, {}, {}, {}, Formula(nullptr), Formula(nullptr)}));
    static const Formula f(std::make_shared<detail::Node>(detail::Node{Op::False, {}, {}, {}, Formula(nullptr), Formula(nullptr)}));
    return value ? t : f;
}

Formula Formula::less(Term l, Term r) {
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Less, std::move(l), std::move(r), {}, placeholder(), placeholder()}));
}

Formula Formula::eq(Term l, Term r) {
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Eq, std::move(l), std::move(r), {}, placeholder(), placeholder()}));
}

Formula Formula::pred(std::string name, Term t) {
    if (name.empty()) throw std::invalid_argument("empty predicate name");
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Pred, std::move(t), {}, std::move(name), placeholder(), placeholder()}));
}

Formula Formula::negation(Formula a) {
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Not, {}, {}, {}, std::move(a), placeholder()}));
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::And, {}, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Or, {}, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::implies(Formula a, Formula b) { return disj(negation(std::move(a)), std::move(b)); }

Formula Formula::exists(std::string var, Formula body) {
    if (var.empty()) throw std::invalid_argument("empty bound variable");
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Exists, {}, {}, std::move(var), std::move(body), placeholder()}));
}

Formula Formula::forall(std::string var, Formula body) {
    if (var.empty()) throw std::invalid_argument("empty bound variable");
    return Formula(std::make_shared<detail::Node>(detail::Node{Op::Forall, {}, {}, std::move(var), std::move(body), placeholder()}));
}

Op Formula::op() const { return node_->op; }
const Term& Formula::lhs() const { return node_->t1; }
const Term& Formula::rhs() const { return node_->t2; }
const Term& Formula::term() const { return node_->t1; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::child() const { return node_->a; }
const Formula& Formula::left() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }

bool Formula::is_atom() const {
    switch (op()) {
        case Op::True:
        case Op::False:
        case Op::Less:
        case Op::Eq:
        case Op::Pred: return true;
        default: return false;
    }
}

bool operator==(const Formula& x, const Formula& y) {
    if (x.node_ == y.node_) return true;
    if (x.op() != y.op()) return false;
    switch (x.op()) {
        case Op::True:
        case Op::False: return true;
        case Op::Less:
        case Op::Eq: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
        case Op::Pred: return x.name() == y.name() && x.term() == y.term();
        case Op::Not: return x.child() == y.child();
        case Op::And:
        case Op::Or: return x.left() == y.left() && x.right() == y.right();
        case Op::Exists:
        case Op::Forall: return x.name() == y.name() && x.child() == y.child();
    }
    return false;
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
    if (t.base == Term::Base::Var) out.insert(t.var);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    auto add = [&](const Term& t) {
        if (t.base == Term::Base::Var && !bound.count(t.var)) out.insert(t.var);
    };
    switch (f.op()) {
        case Op::True:
        case Op::False: return;
        case Op::Less:
        case Op::Eq: add(f.lhs()); add(f.rhs()); return;
        case Op::Pred: add(f.term()); return;
        case Op::Not: collect_free(f.child(), bound, out); return;
        case Op::And:
        case Op::Or:
            collect_free(f.left(), bound, out);
            collect_free(f.right(), bound, out);
            return;
        case Op::Exists:
        case Op::Forall: {
            const bool fresh = bound.insert(f.name()).second;
            collect_free(f.child(), bound, out);
            if (fresh) bound.erase(f.name());
            return;
        }
    }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
    switch (f.op()) {
        case Op::True:
        case Op::False: return;
        case Op::Less:
        case Op::Eq: term_vars(f.lhs(), out); term_vars(f.rhs(), out); return;
        case Op::Pred: term_vars(f.term(), out); return;
        case Op::Not: collect_all(f.child(), out); return;
        case Op::And:
        case Op::Or: collect_all(f.left(), out); collect_all(f.right(), out); return;
        case Op::Exists:
        case Op::Forall: out.insert(f.name()); collect_all(f.child(), out); return;
    }
}

template <typename Fn>
void visit(const Formula& f, Fn&& fn) {
    fn(f);
    switch (f.op()) {
        case Op::Not:
        case Op::Exists:
        case Op::Forall: visit(f.child(), fn); break;
        case Op::And:
        case Op::Or:
            visit(f.left(), fn);
            visit(f.right(), fn);
            break;
        default: break;
    }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_vars(const Formula& f) {
    std::set<std::string> out;
    collect_all(f, out);
    return out;
}

VarStats var_stats(const Formula& f) { return {free_vars(f), all_vars(f).size()}; }

std::set<std::string> predicate_names(const Formula& f) {
    std::set<std::string> out;
    visit(f, [&](const Formula& g) {
        if (g.op() == Op::Pred) out.insert(g.name());
    });
    return out;
}

int quantifier_depth(const Formula& f) {
    switch (f.op()) {
        case Op::Not: return quantifier_depth(f.child());
        case Op::And:
        case Op::Or: return std::max(quantifier_depth(f.left()), quantifier_depth(f.right()));
        case Op::Exists:
        case Op::Forall: return 1 + quantifier_depth(f.child());
        default: return 0;
    }
}

int max_power(const Formula& f) {
    int m = 0;
    visit(f, [&](const Formula& g) {
        if (g.op() == Op::Less || g.op() == Op::Eq) m = std::max({m, g.lhs().power, g.rhs().power});
        if (g.op() == Op::Pred) m = std::max(m, g.term().power);
    });
    return m;
}

bool contains_fixed_point(const Formula& f) {
    bool found = false;
    visit(f, [&](const Formula& g) {
        if ((g.op() == Op::Less || g.op() == Op::Eq) && (g.lhs().is_fixed_point() || g.rhs().is_fixed_point()))
            found = true;
        if (g.op() == Op::Pred && g.term().is_fixed_point()) found = true;
    });
    return found;
}

namespace {

// Binding strength; a child weaker than required is parenthesized.
int strength(const Formula& f) {
    switch (f.op()) {
        case Op::Exists:
        case Op::Forall: return 0;
        case Op::Or: return 1;
        case Op::And: return 2;
        case Op::Not: return 3;
        default: return 4;
    }
}

void render_into(const Formula& f, int required, std::string& out) {
    const bool paren = strength(f) < required;
    if (paren) out += '(';
    switch (f.op()) {
        case Op::True: out += "true"; break;
        case Op::False: out += "false"; break;
        case Op::Less: out += f.lhs().str() + " < " + f.rhs().str(); break;
        case Op::Eq: out += f.lhs().str() + " = " + f.rhs().str(); break;
        case Op::Pred: out += f.name() + "(" + f.term().str() + ")"; break;
        case Op::Not:
            out += '!';
            render_into(f.child(), 3, out);
            break;
        case Op::And:
            render_into(f.left(), 2, out);
            out += " & ";
            render_into(f.right(), 3, out);
            break;
        case Op::Or:
            render_into(f.left(), 1, out);
            out += " | ";
            render_into(f.right(), 2, out);
            break;
        case Op::Exists:
        case Op::Forall:
            out += f.op() == Op::Exists ? 'E' : 'A';
            out += f.name();
            out += ". ";
            render_into(f.child(), 0, out);
            break;
    }
    if (paren) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, 0, out);
    return out;
}

namespace {

Term substitute_term(const Term& t, const std::string& var, const Term& by) {
    if (t.base != Term::Base::Var || t.var != var) return t;
    Term r = by;
    r.power += t.power;
    return r;
}

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const Term& by) {
    switch (f.op()) {
        case Op::True:
        case Op::False: return f;
        case Op::Less: return Formula::less(substitute_term(f.lhs(), var, by), substitute_term(f.rhs(), var, by));
        case Op::Eq: return Formula::eq(substitute_term(f.lhs(), var, by), substitute_term(f.rhs(), var, by));
        case Op::Pred: return Formula::pred(f.name(), substitute_term(f.term(), var, by));
        case Op::Not: return Formula::negation(substitute(f.child(), var, by));
        case Op::And: return Formula::conj(substitute(f.left(), var, by), substitute(f.right(), var, by));
        case Op::Or: return Formula::disj(substitute(f.left(), var, by), substitute(f.right(), var, by));
        case Op::Exists:
        case Op::Forall: {
            if (f.name() == var) return f;
            if (by.base == Term::Base::Var && by.var == f.name() && free_vars(f.child()).count(var))
                throw std::logic_error("substitution would capture variable '" + by.var + "'");
            auto body = substitute(f.child(), var, by);
            return f.op() == Op::Exists ? Formula::exists(f.name(), body) : Formula::forall(f.name(), body);
        }
    }
    return f;
}

Formula desugar_forall(const Formula& f) {
    switch (f.op()) {
        case Op::Not: return Formula::negation(desugar_forall(f.child()));
        case Op::And: return Formula::conj(desugar_forall(f.left()), desugar_forall(f.right()));
        case Op::Or: return Formula::disj(desugar_forall(f.left()), desugar_forall(f.right()));
        case Op::Exists: return Formula::exists(f.name(), desugar_forall(f.child()));
        case Op::Forall:
            return Formula::negation(Formula::exists(f.name(), Formula::negation(desugar_forall(f.child()))));
        default: return f;
    }
}

bool is_unnested(const Formula& f) {
    bool ok = true;
    visit(f, [&](const Formula& g) {
        auto plain = [](const Term& t) { return t.base == Term::Base::Var && t.power == 0; };
        auto single = [](const Term& t) { return t.base == Term::Base::Var && t.power == 1; };
        switch (g.op()) {
            case Op::Less: ok = ok && plain(g.lhs()) && plain(g.rhs()); break;
            case Op::Eq:
                ok = ok && ((plain(g.lhs()) && (plain(g.rhs()) || single(g.rhs()))) ||
                            (single(g.lhs()) && plain(g.rhs())));
                break;
            case Op::Pred: ok = ok && plain(g.term()); break;
            default: break;
        }
    });
    return ok;
}

}  // namespace efg
