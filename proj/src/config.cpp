#include "efg/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace efg {

void Configuration::check() const {
    if (left.size() != right.size()) throw std::invalid_argument("configuration sides differ in length");
}

std::string to_string(Player p) { return p == Player::Spoiler ? "Spoiler" : "Duplicator"; }
std::string to_string(Side s) { return s == Side::A ? "A" : "B"; }

std::string GameSpec::str() const {
    std::string s = "rounds=" + std::to_string(rounds);
    s += " pebbles=" + (pebbles ? std::to_string(*pebbles) : std::string("unbounded"));
    s += " locality=" + (locality ? locality->str() : std::string("none"));
    return s;
}

Configuration apply_round(const Configuration& c, const Move& m, const Rational& response) {
    Configuration out = c;
    const Rational& a = m.side == Side::A ? m.point : response;
    const Rational& b = m.side == Side::A ? response : m.point;
    if (m.label == out.size()) {
        out.left.push_back(a);
        out.right.push_back(b);
    } else if (m.label < out.size()) {
        out.left[m.label] = a;
        out.right[m.label] = b;
    } else {
        throw std::invalid_argument("move label out of range");
    }
    return out;
}

Configuration Play::current() const {
    Configuration c = start;
    for (const auto& r : rounds) c = apply_round(c, r.move, r.response);
    return c;
}

Rational diameter(const Assignment& u) {
    if (u.size() <= 1) return Rational(0);
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    return *hi - *lo;
}

Rational frac(const Rational& x) { return x.frac(); }

bool equiv_diff(const Assignment& u, const Assignment& v) {
    if (u.size() != v.size()) throw std::invalid_argument("equiv_diff: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if ((u[i] - u[j]).floor() != (v[i] - v[j]).floor()) return false;
    return true;
}

bool equiv_diff_definitional(const Assignment& u, const Assignment& v, std::int64_t bound) {
    if (u.size() != v.size()) throw std::invalid_argument("equiv_diff: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            const Rational du = u[i] - u[j], dv = v[i] - v[j];
            for (std::int64_t c = -bound; c <= bound; ++c) {
                if ((du < Rational(c)) != (dv < Rational(c))) return false;
                if ((du == Rational(c)) != (dv == Rational(c))) return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> frac_order(const Assignment& u, std::size_t k) {
    if (k >= u.size()) throw std::out_of_range("frac_order: base index out of range");
    std::vector<std::size_t> idx(u.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto key = [&](std::size_t i) { return (u[i] - u[k]).frac(); };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i : idx) {
        if (groups.empty() || key(groups.back().front()) != key(i))
            groups.push_back({i});
        else
            groups.back().push_back(i);
    }
    return groups;
}

bool is_increasing(const Assignment& u) {
    if (u.empty()) throw std::invalid_argument("is_increasing: empty assignment");
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if ((u[i + 1] - u[0]).frac() < (u[i] - u[0]).frac()) return false;
    return true;
}

namespace {

bool same_labels(const Signal& a, const Signal& b, const Rational& u, const Rational& v) {
    for (const auto& [name, ivs] : a.predicates())
        if (b.value_at(name, v) != a.value_at(name, u)) return false;
    for (const auto& [name, ivs] : b.predicates())
        if (!a.predicates().count(name) && b.value_at(name, v)) return false;
    return true;
}

// atoms between (u, v) and (ui, vi) in both directions
bool same_relation(const Rational& u, const Rational& v, const Rational& ui, const Rational& vi,
                   const FunctionSpec& fn) {
    if ((u < ui) != (v < vi) || (ui < u) != (vi < v)) return false;
    if ((u == fn.apply(ui)) != (v == fn.apply(vi))) return false;
    if ((ui == fn.apply(u)) != (vi == fn.apply(v))) return false;
    return true;
}

}  // namespace

bool extends_partial_isomorphism(const Assignment& us, const Assignment& vs, const Rational& u, const Rational& v,
                                 const Signal& a, const Signal& b, const FunctionSpec& fn,
                                 std::optional<std::size_t> skip) {
    if (!same_labels(a, b, u, v)) return false;
    if ((u == fn.apply(u)) != (v == fn.apply(v))) return false;
    for (std::size_t i = 0; i < us.size(); ++i) {
        if (skip && *skip == i) continue;
        if (!same_relation(u, v, us[i], vs[i], fn)) return false;
    }
    return true;
}

bool partial_isomorphism(const Configuration& c, const Signal& a, const Signal& b, const FunctionSpec& fn) {
    c.check();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Assignment us(c.left.begin(), c.left.begin() + static_cast<std::ptrdiff_t>(i));
        const Assignment vs(c.right.begin(), c.right.begin() + static_cast<std::ptrdiff_t>(i));
        if (!extends_partial_isomorphism(us, vs, c.left[i], c.right[i], a, b, fn)) return false;
    }
    return true;
}

Assignment canonical_difference_type(const Assignment& u, const Rational& step) {
    if (u.empty()) return {};
    const Rational base = *std::min_element(u.begin(), u.end());
    Assignment out(u.size());
    if (step == Rational(0)) {
        std::vector<Rational> sorted(u);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < u.size(); ++i)
            out[i] = Rational(std::lower_bound(sorted.begin(), sorted.end(), u[i]) - sorted.begin());
        return out;
    }
    const Rational s = step.abs();
    std::vector<Rational> fracs;
    fracs.reserve(u.size());
    for (const auto& x : u) fracs.push_back(frac((x - base) / s));
    std::vector<Rational> distinct(fracs);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto t = static_cast<std::int64_t>(distinct.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const std::int64_t whole = ((u[i] - base) / s).floor();
        const std::int64_t rank = std::lower_bound(distinct.begin(), distinct.end(), fracs[i]) - distinct.begin();
        out[i] = s * (Rational(whole) + Rational(rank, t));
    }
    return out;
}

}  // namespace efg
