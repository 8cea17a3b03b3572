#include "efg/evaluate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

namespace efg {

namespace {

struct CTerm {
    int slot = -1;  // -1 is the fixed point constant
    int power = 0;
};

struct Node {
    enum class Kind { Const, Less, Eq, Pred, And, Or, Exists };
    Kind kind = Kind::Const;
    bool negated = false;
    bool value = false;
    CTerm l, r;
    std::string pred;
    std::vector<int> kids;  // And/Or operands; Exists: conjuncts of the body
    int slot = -1;          // Exists: bound slot
    std::vector<int> free;  // sorted free slots
    int depth = 0;
    int maxpow = 0;
    // truth depends on the free values only through floors of pairwise differences
    // (with breakpoints) clamped to [-bound - 1, bound]
    int bound = 0;
    std::set<std::string> preds;  // predicates mentioned in the subtree
    // Exists: conjuncts split by whether they mention the bound slot
    std::vector<int> outer, near, rest;
    std::vector<int> implied;  // Exists: atoms entailed by this node, see Compiler::imply
    int horizon = 0;  // Exists: translates of anchors needed for the bound variable

    bool atom() const { return kind == Kind::Less || kind == Kind::Eq || kind == Kind::Pred; }
};

class Compiler {
public:
    std::vector<Node> nodes;
    std::map<std::string, int> slots;

    int slot_of(const std::string& v) {
        auto [it, inserted] = slots.try_emplace(v, static_cast<int>(slots.size()));
        return it->second;
    }

    CTerm term(const Term& t) {
        if (t.is_fixed_point()) return {-1, t.power};
        return {slot_of(t.var), t.power};
    }

    int add(Node n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    int constant(bool v) {
        Node n;
        n.value = v;
        return add(std::move(n));
    }

    // negation normal form; Forall becomes !Ex!, negation stays on atoms and Exists
    int nnf(const Formula& f, bool pos) {
        switch (f.op()) {
            case Op::True: return constant(pos);
            case Op::False: return constant(!pos);
            case Op::Less:
            case Op::Eq:
            case Op::Pred: {
                Node n;
                n.kind = f.op() == Op::Less ? Node::Kind::Less : f.op() == Op::Eq ? Node::Kind::Eq : Node::Kind::Pred;
                n.negated = !pos;
                if (f.op() == Op::Pred) {
                    n.pred = f.name();
                    n.l = term(f.term());
                } else {
                    n.l = term(f.lhs());
                    n.r = term(f.rhs());
                }
                return finish(add(std::move(n)));
            }
            case Op::Not: return nnf(f.child(), !pos);
            case Op::And:
            case Op::Or: {
                const bool conj = (f.op() == Op::And) == pos;
                Node n;
                n.kind = conj ? Node::Kind::And : Node::Kind::Or;
                for (int k : {nnf(f.left(), pos), nnf(f.right(), pos)}) {
                    if (nodes[k].kind == n.kind) {
                        const auto sub = nodes[k].kids;
                        n.kids.insert(n.kids.end(), sub.begin(), sub.end());
                    } else {
                        n.kids.push_back(k);
                    }
                }
                return finish(add(std::move(n)));
            }
            case Op::Exists:
            case Op::Forall: {
                const bool universal = f.op() == Op::Forall;
                const int body = nnf(f.child(), !universal);
                return exists(slot_of(f.name()), body, universal == pos);
            }
        }
        throw std::logic_error("unreachable");
    }

    // Ex distributes over a disjunctive body
    int exists(int slot, int body, bool negated) {
        if (nodes[body].kind == Node::Kind::Or) {
            Node n;
            n.kind = Node::Kind::Or;
            for (int k : nodes[body].kids) n.kids.push_back(exists(slot, k, false));
            int id = finish(add(std::move(n)));
            if (!negated) return id;
            Node neg;
            neg.kind = Node::Kind::And;
            for (int k : nodes[id].kids) {
                Node copy = nodes[k];
                copy.negated = true;
                neg.kids.push_back(add(std::move(copy)));
            }
            return finish(add(std::move(neg)));
        }
        Node n;
        n.kind = Node::Kind::Exists;
        n.negated = negated;
        n.slot = slot;
        if (nodes[body].kind == Node::Kind::And)
            n.kids = nodes[body].kids;
        else
            n.kids = {body};
        return finish(add(std::move(n)));
    }

    int finish(int id) {
        Node& n = nodes[id];
        std::vector<int> fv;
        auto add_term = [&](const CTerm& t) {
            if (t.slot >= 0) fv.push_back(t.slot);
            n.maxpow = std::max(n.maxpow, t.power);
        };
        int sub_depth = 0, sub_bound = 0;
        switch (n.kind) {
            case Node::Kind::Const: break;
            case Node::Kind::Pred:
                add_term(n.l);
                n.preds.insert(n.pred);
                n.bound = n.l.power;
                break;
            case Node::Kind::Less:
            case Node::Kind::Eq:
                add_term(n.l);
                add_term(n.r);
                n.bound = n.l.slot >= 0 && n.r.slot >= 0 ? std::abs(n.l.power - n.r.power)
                                                         : std::max(n.l.power, n.r.power);
                break;
            default:
                for (int k : n.kids) {
                    const Node& c = nodes[k];
                    fv.insert(fv.end(), c.free.begin(), c.free.end());
                    n.maxpow = std::max(n.maxpow, c.maxpow);
                    n.preds.insert(c.preds.begin(), c.preds.end());
                    sub_depth = std::max(sub_depth, c.depth);
                    sub_bound = std::max(sub_bound, c.bound);
                }
                n.bound = sub_bound;
        }
        std::sort(fv.begin(), fv.end());
        fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
        if (n.kind == Node::Kind::Exists) {
            std::erase(fv, n.slot);
            n.depth = sub_depth + 1;
            std::vector<int> conjuncts = n.kids;
            for (int k : n.kids)
                if (nodes[k].kind == Node::Kind::Exists && !nodes[k].negated)
                    conjuncts.insert(conjuncts.end(), nodes[k].implied.begin(), nodes[k].implied.end());
            for (int k : conjuncts) {
                const Node& c = nodes[k];
                const bool mentions = std::binary_search(c.free.begin(), c.free.end(), n.slot);
                if (!mentions)
                    n.outer.push_back(k);
                else if (c.atom())
                    n.near.push_back(k);
                else
                    n.rest.push_back(k);
            }
            std::stable_sort(n.rest.begin(), n.rest.end(),
                             [&](int a, int b) { return nodes[a].depth < nodes[b].depth; });
            // a conjunct x = f^k(y) pins x to a translate of y; otherwise eliminating x
            // combines two difference constraints
            n.bound = 2 * sub_bound + 2;
            for (int k : n.near) {
                const Node& c = nodes[k];
                if (c.kind != Node::Kind::Eq || c.negated || c.l.slot < 0 || c.r.slot < 0) continue;
                if ((c.l.slot == n.slot) == (c.r.slot == n.slot)) continue;
                n.bound = std::min(n.bound, sub_bound + std::abs(c.l.power - c.r.power));
            }
            n.horizon = sub_bound + 1;
        } else {
            n.depth = sub_depth;
        }
        n.free = std::move(fv);
        if (n.kind == Node::Kind::Exists && !n.negated) imply(id);
        return id;
    }

    /*
     * Atoms entailed by a positive Ex: its atomic conjuncts free of x, and
     * l ~ u for every pair of plain bounds l ~ x, x ~ u.  The parent adds them
     * as redundant conjuncts, which lets it narrow its own range.
     */
    void imply(int id) {
        struct Side {
            CTerm t;
            bool strict;
        };
        std::vector<Side> lower, upper;
        std::vector<int> implied;
        const int slot = nodes[id].slot;
        for (int k : nodes[id].outer)
            if (nodes[k].atom()) implied.push_back(k);
        for (int k : nodes[id].near) {
            const Node& a = nodes[k];
            if (a.kind == Node::Kind::Pred) continue;
            const bool left = a.l.slot == slot && a.l.power == 0;
            const bool right = a.r.slot == slot && a.r.power == 0;
            if (left == right) continue;
            const CTerm& other = left ? a.r : a.l;
            if (other.slot == slot) continue;
            if (a.kind == Node::Kind::Eq) {
                if (a.negated) continue;
                lower.push_back({other, false});
                upper.push_back({other, false});
            } else if (left != a.negated) {  // x < t, or !(t < x)
                upper.push_back({other, !a.negated});
            } else {
                lower.push_back({other, !a.negated});
            }
        }
        constexpr std::size_t cap = 32;
        for (const auto& l : lower) {
            for (const auto& u : upper) {
                if (implied.size() >= cap) break;
                Node n;
                n.kind = Node::Kind::Less;
                if (l.strict || u.strict) {
                    n.l = l.t;
                    n.r = u.t;
                } else {  // l <= u
                    n.l = u.t;
                    n.r = l.t;
                    n.negated = true;
                }
                implied.push_back(finish(add(std::move(n))));
            }
        }
        nodes[id].implied = std::move(implied);
    }
};

struct Key {
    int node;
    std::vector<Rational> values;
    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::size_t h = std::hash<int>{}(k.node);
        for (const auto& v : k.values) h = h * 1000003u ^ RationalHash{}(v);
        return h;
    }
};

class Evaluator {
public:
    Evaluator(const Compiler& c, const Signal& s, const FunctionSpec& fn, const Discretization& d)
        : nodes_(c.nodes), signal_(s), fn_(fn), disc_(d) {
        if (fn.has_fixed_point()) fixed_ = fn.fixed_point();
    }

    bool run(int root, std::vector<std::optional<Rational>> env) {
        env_ = std::move(env);
        return eval(root);
    }

private:
    Rational value(const CTerm& t) const {
        if (t.slot < 0) {
            if (!fixed_) throw std::invalid_argument("fixed point constant used with a function that has none");
            return *fixed_;
        }
        return fn_.iterate(*env_[t.slot], t.power);
    }

    bool eval(int id) {
        const Node& n = nodes_[id];
        switch (n.kind) {
            case Node::Kind::Const: return n.value;
            case Node::Kind::Less: return (value(n.l) < value(n.r)) != n.negated;
            case Node::Kind::Eq: return (value(n.l) == value(n.r)) != n.negated;
            case Node::Kind::Pred: return signal_.value_at(n.pred, value(n.l)) != n.negated;
            case Node::Kind::And:
                for (int k : n.kids)
                    if (!eval(k)) return false;
                return true;
            case Node::Kind::Or:
                for (int k : n.kids)
                    if (eval(k)) return true;
                return false;
            case Node::Kind::Exists: return exists(id) != n.negated;
        }
        throw std::logic_error("unreachable");
    }

    // exclusive/inclusive bound of the bound variable from an atom f^m(x) ~ t
    struct Bounds {
        std::optional<Rational> lo, hi, exact;
        void lower(const Rational& v) {
            if (!lo || *lo < v) lo = v;
        }
        void upper(const Rational& v) {
            if (!hi || v < *hi) hi = v;
        }
    };

    void narrow(const Node& a, int slot, Bounds& b) const {
        if (a.kind == Node::Kind::Pred) return;
        const bool left = a.l.slot == slot, right = a.r.slot == slot;
        if (left == right) return;
        const CTerm& mine = left ? a.l : a.r;
        const CTerm& other = left ? a.r : a.l;
        if (mine.power > 0 && !fn_.is_invertible()) return;
        // f^m(x) ~ t  <=>  x ~' f^-m(t), with ~' flipped when f^m reverses order
        const Rational g = fn_.iterate(value(other), -mine.power);
        const bool increasing = fn_.a() > Rational(0) || mine.power % 2 == 0;
        if (a.kind == Node::Kind::Eq) {
            if (!a.negated) b.exact = g;
            return;
        }
        // x is (below g) when the atom says f^m(x) < t with increasing f^m, etc.
        const bool below = (left == increasing) != a.negated;
        if (below)
            b.upper(g);
        else
            b.lower(g);
    }

    bool exists(int id) {
        const Node& n = nodes_[id];
        Key key{id, {}};
        key.values.reserve(n.free.size());
        for (int s : n.free) {
            if (!env_[s]) throw std::logic_error("evaluate: slot unbound");
            key.values.push_back(*env_[s]);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const bool result = search(n);
        memo_.emplace(std::move(key), result);
        return result;
    }

    bool search(const Node& n) {
        for (int k : n.outer)
            if (!eval(k)) return false;

        Bounds bounds;
        for (int k : n.near) narrow(nodes_[k], n.slot, bounds);

        std::vector<Rational> cands;
        if (bounds.exact) {
            cands.push_back(*bounds.exact);
        } else {
            std::vector<Rational> anchors;
            for (const auto& p : n.preds) {
                const auto& bp = breakpoints_of(p);
                anchors.insert(anchors.end(), bp.begin(), bp.end());
            }
            for (const auto& v : n.free) anchors.push_back(*env_[v]);
            const int horizon = n.horizon * disc_.horizon_scale;
            cands = candidate_points(anchors, horizon, fn_, disc_.subdivisions, bounds.lo, bounds.hi);
        }

        const std::optional<Rational> saved = env_[n.slot];
        bool found = false;
        for (const auto& c : cands) {
            env_[n.slot] = c;
            if (holds_all(n.near) && holds_all(n.rest)) {
                found = true;
                break;
            }
        }
        env_[n.slot] = saved;
        return found;
    }

    const std::vector<Rational>& breakpoints_of(const std::string& pred) {
        auto it = breakpoints_.find(pred);
        if (it != breakpoints_.end()) return it->second;
        std::vector<Rational> bp;
        if (auto p = signal_.predicates().find(pred); p != signal_.predicates().end()) {
            for (const auto& iv : p->second) {
                bp.push_back(iv.lo);
                bp.push_back(iv.hi);
            }
        }
        return breakpoints_.emplace(pred, std::move(bp)).first->second;
    }

    bool holds_all(const std::vector<int>& ks) {
        for (int k : ks)
            if (!eval(k)) return false;
        return true;
    }

    const std::vector<Node>& nodes_;
    const Signal& signal_;
    const FunctionSpec& fn_;
    Discretization disc_;
    std::map<std::string, std::vector<Rational>> breakpoints_;
    std::optional<Rational> fixed_;
    std::vector<std::optional<Rational>> env_;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace

bool evaluate(const Formula& f, const Signal& s, const Valuation& env, const FunctionSpec& fn,
              const EvalOptions& opts) {
    for (const auto& v : free_vars(f))
        if (!env.count(v)) throw std::invalid_argument("evaluate: unbound free variable " + v);
    if (contains_fixed_point(f) && !fn.has_fixed_point())
        throw std::invalid_argument("evaluate: fixed point constant used with a translation");

    Compiler c;
    const int root = c.nnf(f, true);
    std::vector<std::optional<Rational>> slots(c.slots.size());
    for (const auto& [name, slot] : c.slots)
        if (auto it = env.find(name); it != env.end()) slots[slot] = it->second;

    const bool result = Evaluator(c, s, fn, opts.discretization).run(root, slots);
    if (opts.stability_check) {
        const bool refined = Evaluator(c, s, fn, Discretization::refined()).run(root, slots);
        if (refined != result)
            throw DiscretizationError("evaluation changes under refined discretization: " + render(f));
    }
    return result;
}

}  // namespace efg
