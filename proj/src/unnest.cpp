#include "efg/unnest.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace efg {

namespace {

std::vector<std::string> variable_pool(const Formula& f) {
    const auto used = all_vars(f);
    std::vector<std::string> pool(used.begin(), used.end());
    static const char* spare[] = {"z", "w", "v", "u", "t", "s", "r", "q"};
    auto add = [&](const std::string& name) {
        if (!used.count(name)) pool.push_back(name);
    };
    for (const char* s : spare) {
        if (pool.size() >= 3) break;
        add(s);
    }
    for (int i = 1; pool.size() < 3; ++i) add("z" + std::to_string(i));
    std::sort(pool.begin(), pool.end());
    return pool;
}

class Unnester {
public:
    explicit Unnester(std::vector<std::string> pool) : pool_(std::move(pool)) {}

    Formula run(const Formula& f) const {
        switch (f.op()) {
            case Op::True:
            case Op::False: return f;
            case Op::Less: return less(f.lhs(), f.rhs());
            case Op::Eq: return eq(f.lhs(), f.rhs());
            case Op::Pred: return pred(f.name(), f.term());
            case Op::Not: return Formula::negation(run(f.child()));
            case Op::And: return Formula::conj(run(f.left()), run(f.right()));
            case Op::Or: return Formula::disj(run(f.left()), run(f.right()));
            case Op::Exists: return Formula::exists(f.name(), run(f.child()));
            case Op::Forall: return Formula::forall(f.name(), run(f.child()));
        }
        throw std::logic_error("unreachable");
    }

private:
    static void require_var(const Term& t) {
        if (t.is_fixed_point()) throw std::invalid_argument("unnest: fixed point constant in term");
    }

    std::string fresh(const Term& a, const Term* b = nullptr) const {
        for (const auto& v : pool_)
            if (v != a.var && (!b || v != b->var)) return v;
        throw std::logic_error("unnest: variable pool exhausted");
    }

    // Ez. (z = f(base) & body(z))
    template <class Body>
    Formula peel(const Term& t, const std::string& z, Body body) const {
        return Formula::exists(z, Formula::conj(Formula::eq(Term::variable(z), Term::app(1, t.var)),
                                                body(Term::app(t.power - 1, z))));
    }

    Formula less(const Term& l, const Term& r) const {
        require_var(l);
        require_var(r);
        if (l.power > 0) return peel(l, fresh(l, &r), [&](const Term& z) { return less(z, r); });
        if (r.power > 0) return peel(r, fresh(l, &r), [&](const Term& z) { return less(l, z); });
        return Formula::less(l, r);
    }

    Formula eq(const Term& l, const Term& r) const {
        require_var(l);
        require_var(r);
        if (l.power == 0 && r.power <= 1) return Formula::eq(l, r);
        if (l.power == 1 && r.power == 0) return Formula::eq(r, l);
        if (l.power > 0) return peel(l, fresh(l, &r), [&](const Term& z) { return eq(z, r); });
        return peel(r, fresh(l, &r), [&](const Term& z) { return eq(l, z); });
    }

    Formula pred(const std::string& name, const Term& t) const {
        require_var(t);
        if (t.power == 0) return Formula::pred(name, t);
        return peel(t, fresh(t), [&](const Term& z) { return pred(name, z); });
    }

    std::vector<std::string> pool_;
};

}  // namespace

Formula unnest(const Formula& f) { return Unnester(variable_pool(f)).run(f); }

}  // namespace efg
