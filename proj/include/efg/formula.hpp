#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace efg {

/*
 * A term f^power(base).  The base is a variable or, in intermediate forms
 * of the antitone rewriting only, the fixed point constant x*.
 * power 0 is a plain variable.
 */
struct Term {
    enum class Base { Var, FixedPoint };

    Base base = Base::Var;
    std::string var;
    int power = 0;

    static Term variable(std::string name) { return {Base::Var, std::move(name), 0}; }
    static Term app(int power, std::string name);
    static Term fixed_point(int power = 0) { return {Base::FixedPoint, {}, power}; }

    bool is_var() const { return base == Base::Var && power == 0; }
    bool is_fixed_point() const { return base == Base::FixedPoint; }
    std::string str() const;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class Op { True, False, Less, Eq, Pred, Not, And, Or, Exists, Forall };

class Formula;

namespace detail {
struct Node;
}

/*
 * Immutable formula handle.  Nodes are shared, so copies are cheap and
 * safe to read from several threads.
 */
class Formula {
public:
    static Formula truth(bool value);
    static Formula less(Term l, Term r);
    static Formula eq(Term l, Term r);
    static Formula pred(std::string name, Term t);
    static Formula negation(Formula a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    /// a -> b, expressed as !a | b.
    static Formula implies(Formula a, Formula b);
    static Formula exists(std::string var, Formula body);
    static Formula forall(std::string var, Formula body);

    Op op() const;
    const Term& lhs() const;   // Less, Eq
    const Term& rhs() const;   // Less, Eq
    const Term& term() const;  // Pred
    const std::string& name() const;  // Pred name or bound variable
    const Formula& child() const;     // Not, Exists, Forall
    const Formula& left() const;      // And, Or
    const Formula& right() const;     // And, Or

    bool is_atom() const;
    bool is_quantifier() const { return op() == Op::Exists || op() == Op::Forall; }

    /// Identity of the shared node; stable while any handle is alive.
    const void* id() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    explicit Formula(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const detail::Node> node_;
};

struct VarStats {
    std::set<std::string> free;
    std::size_t total_distinct = 0;
};

VarStats var_stats(const Formula& f);
std::set<std::string> free_vars(const Formula& f);
/// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_vars(const Formula& f);
std::set<std::string> predicate_names(const Formula& f);
int quantifier_depth(const Formula& f);
/// Largest f-power in any term.
int max_power(const Formula& f);
bool contains_fixed_point(const Formula& f);

/// Grammar-conformant text; render(parse(t)) reparses to an equal AST.
std::string render(const Formula& f);

/// Replaces free occurrences of `var` by `t` (powers compose: x -> f^k(y) maps f^m(x) to f^{m+k}(y)).
Formula substitute(const Formula& f, const std::string& var, const Term& t);

/// Desugars Forall into !Exists! (Or is kept).
Formula desugar_forall(const Formula& f);

/// True iff f only uses the atoms x=y, x<y, P(x), x=f(y) (and f(y)=x).
bool is_unnested(const Formula& f);

}  // namespace efg
