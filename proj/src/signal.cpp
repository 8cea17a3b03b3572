#include "efg/signal.hpp"

#include <algorithm>
#include <stdexcept>

namespace efg {

std::string Interval::str() const {
    return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

namespace {

std::vector<Interval> merge_intervals(std::vector<Interval> ivs) {
    for (const auto& iv : ivs)
        if (!(iv.lo < iv.hi)) throw std::invalid_argument("interval " + iv.str() + " has lo >= hi");
    std::sort(ivs.begin(), ivs.end(), [](const Interval& x, const Interval& y) {
        if (x.lo != y.lo) return x.lo < y.lo;
        return x.lo_closed && !y.lo_closed;
    });
    std::vector<Interval> out;
    for (const auto& iv : ivs) {
        if (!out.empty()) {
            Interval& cur = out.back();
            const bool touches = iv.lo < cur.hi || (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
            if (touches) {
                if (iv.lo == cur.lo) cur.lo_closed = cur.lo_closed || iv.lo_closed;
                if (cur.hi < iv.hi) {
                    cur.hi = iv.hi;
                    cur.hi_closed = iv.hi_closed;
                } else if (cur.hi == iv.hi) {
                    cur.hi_closed = cur.hi_closed || iv.hi_closed;
                }
                continue;
            }
        }
        out.push_back(iv);
    }
    return out;
}

}  // namespace

Signal normalize(Signal::Predicates preds) { return Signal(std::move(preds)); }

Signal::Signal(Predicates preds) {
    for (auto& [name, ivs] : preds) {
        auto merged = merge_intervals(std::move(ivs));
        if (!merged.empty()) preds_.emplace(name, std::move(merged));
    }
}

bool Signal::empty() const { return preds_.empty(); }

bool Signal::value_at(const std::string& pred, const Rational& x) const {
    const auto it = preds_.find(pred);
    if (it == preds_.end()) return false;
    const auto& ivs = it->second;
    // last interval whose lo <= x
    auto pos = std::upper_bound(ivs.begin(), ivs.end(), x,
                                [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    if (pos == ivs.begin()) return false;
    return std::prev(pos)->contains(x);
}

std::vector<Rational> Signal::breakpoints() const {
    std::vector<Rational> pts;
    for (const auto& [_, ivs] : preds_)
        for (const auto& iv : ivs) {
            pts.push_back(iv.lo);
            pts.push_back(iv.hi);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<std::string> Signal::predicate_names() const {
    std::vector<std::string> names;
    for (const auto& [name, _] : preds_) names.push_back(name);
    return names;
}

Signal Signal::translated(const Rational& t) const {
    Predicates out;
    for (const auto& [name, ivs] : preds_)
        for (auto iv : ivs) {
            iv.lo += t;
            iv.hi += t;
            out[name].push_back(iv);
        }
    return Signal(std::move(out));
}

Signal Signal::scaled(const Rational& factor) const {
    if (!(Rational(0) < factor)) throw std::invalid_argument("scale factor must be positive");
    Predicates out;
    for (const auto& [name, ivs] : preds_)
        for (auto iv : ivs) {
            iv.lo *= factor;
            iv.hi *= factor;
            out[name].push_back(iv);
        }
    return Signal(std::move(out));
}

Interval preimage(const Interval& iv, const FunctionSpec& f) {
    if (!f.is_invertible()) throw std::invalid_argument("preimage under a constant function");
    const Rational x = f.apply_inverse(iv.lo);
    const Rational y = f.apply_inverse(iv.hi);
    if (Rational(0) < f.a()) return {x, y, iv.lo_closed, iv.hi_closed};
    return {y, x, iv.hi_closed, iv.lo_closed};
}

Signal Signal::with_preimage(const std::string& pred, const std::string& name, const FunctionSpec& f) const {
    if (preds_.count(name)) throw std::invalid_argument("predicate '" + name + "' already exists");
    Predicates out = preds_;
    const auto it = preds_.find(pred);
    if (it != preds_.end())
        for (const auto& iv : it->second) out[name].push_back(preimage(iv, f));
    return Signal(std::move(out));
}

bool agree_on_window(const Signal& a, const Signal& b, const Rational& lo, const Rational& hi,
                     const Rational& t) {
    std::vector<Rational> pts{lo, hi};
    for (const auto& p : a.breakpoints())
        if (lo <= p && p <= hi) pts.push_back(p);
    for (const auto& p : b.breakpoints())
        if (lo <= p - t && p - t <= hi) pts.push_back(p - t);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Rational> probes = pts;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) probes.push_back(Rational::midpoint(pts[i], pts[i + 1]));

    std::vector<std::string> names = a.predicate_names();
    for (const auto& n : b.predicate_names()) names.push_back(n);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& n : names)
        for (const auto& x : probes)
            if (a.value_at(n, x) != b.value_at(n, x + t)) return false;
    return true;
}

}  // namespace efg
