#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace efg {

/*
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Always canonical: gcd(num, den) = 1 and den > 0.  Intermediate products
 * are formed in 128 bits; a result that does not fit back into 64 bits
 * raises std::overflow_error rather than silently wrapping.
 */
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    /// u - floor(u), always in [0, 1).
    Rational frac() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    /// "p" or "p/q".
    std::string str() const;
    /// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static Rational parse(std::string_view text);

    static Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// 2^e as a rational, e may be negative.
Rational pow2(int e);

struct RationalHash {
    std::size_t operator()(const Rational& r) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(r.num()) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(r.den()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/*
 * Rational extended with -infinity and +infinity.  Used for decomposition
 * margins where the outermost neighbour does not exist.
 */
class ExtendedRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedRational(const Rational& r) : kind_(Kind::Finite), value_(r) {}  // NOLINT(implicit)
    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rational& value() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    std::string str() const;

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}

    Kind kind_;
    Rational value_;
};

}  // namespace efg
