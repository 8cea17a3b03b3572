#include "efg/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace efg {

int horizon_for(int rounds, const Discretization& d) {
    if (rounds < 0) throw std::invalid_argument("negative round count");
    if (rounds > 30) throw std::overflow_error("horizon too large");
    return ((1 << rounds) + rounds) * d.horizon_scale;
}

namespace {

bool in_range(const Rational& x, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    return (!lo || !(x < *lo)) && (!hi || !(*hi < x));
}

// translates of b by multiples of step > 0, |z| <= horizon, clipped to the range
void push_translates(std::vector<Rational>& out, const Rational& b, const Rational& step, int horizon,
                     const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    std::int64_t zlo = -horizon, zhi = horizon;
    if (lo) zlo = std::max<std::int64_t>(zlo, ((*lo - b) / step).ceil());
    if (hi) zhi = std::min<std::int64_t>(zhi, ((*hi - b) / step).floor());
    for (std::int64_t z = zlo; z <= zhi; ++z) out.push_back(b + step * Rational(z));
}

// orbits of a non-translation grow or shrink geometrically; far orbit points are cut
// off so later arithmetic on candidates keeps 64-bit headroom
bool representable(const Rational& x) {
    constexpr std::int64_t limit = std::int64_t{1} << 30;
    return x.den() <= limit && x.num() <= limit && x.num() >= -limit;
}

}  // namespace

std::vector<Rational> candidate_points(std::span<const Rational> anchors, int horizon, const FunctionSpec& fn,
                                       int subdivisions, const std::optional<Rational>& lo,
                                       const std::optional<Rational>& hi) {
    if (subdivisions < 1) throw std::invalid_argument("subdivisions must be positive");
    if (lo && hi && *hi < *lo) return {};
    std::vector<Rational> base;
    const bool translation = fn.is_translation() && fn.b() != Rational(0);
    for (const auto& b : anchors) {
        if (translation) {
            push_translates(base, b, fn.b().abs(), horizon, lo, hi);
            continue;
        }
        base.push_back(b);
        if (fn.is_invertible() && !(fn.is_translation())) {
            Rational up = b, down = b;
            bool up_ok = true, down_ok = true;
            for (int z = 1; z <= horizon && (up_ok || down_ok); ++z) {
                if (up_ok) {
                    up = fn.apply(up);
                    up_ok = representable(up);
                    if (up_ok) base.push_back(up);
                }
                if (down_ok) {
                    down = fn.apply_inverse(down);
                    down_ok = representable(down);
                    if (down_ok) base.push_back(down);
                }
            }
        } else if (!fn.is_invertible()) {
            base.push_back(fn.b());
        }
    }
    if (fn.has_fixed_point()) base.push_back(fn.fixed_point());
    if (anchors.empty() && !fn.has_fixed_point()) base.push_back(Rational(0));
    if (lo) base.push_back(*lo);
    if (hi) base.push_back(*hi);

    std::erase_if(base, [&](const Rational& x) { return !in_range(x, lo, hi); });
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (base.empty()) return {};

    std::vector<Rational> out;
    out.reserve(base.size() * static_cast<std::size_t>(subdivisions) + 4);
    if (!lo) {
        out.push_back(base.front() - Rational(2));
        out.push_back(base.front() - Rational(1));
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        out.push_back(base[i]);
        if (i + 1 == base.size()) break;
        const Rational gap = (base[i + 1] - base[i]) / Rational(subdivisions);
        Rational p = base[i];
        for (int s = 1; s < subdivisions; ++s) {
            p += gap;
            out.push_back(p);
        }
    }
    if (!hi) {
        out.push_back(base.back() + Rational(1));
        out.push_back(base.back() + Rational(2));
    }
    // the outer points can collide with translates when the horizon is small
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace efg
