#ifndef LACUNA_RATIONAL_HPP
#define LACUNA_RATIONAL_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lacuna {

/// Exact rational on 64-bit integers, always stored reduced with den > 0.
/// Overflow in arithmetic throws; the library only uses rationals for
/// modest values (powers of two with small exponents, slopes p/q with
/// small denominators), so this is a correctness guard, not a limitation
/// met in practice.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool negative() const { return num < 0; }
    Rational abs() const { return num < 0 ? Rational(-num, den) : *this; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("rational: 64-bit overflow");
        return r;
    }

    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("rational: division by zero");
        return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    Rational operator+(const Rational& o) const {
        return Rational(checked_mul(num, o.den) + checked_mul(o.num, den),
                        checked_mul(den, o.den));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_mul(num, o.den) - checked_mul(o.num, den),
                        checked_mul(den, o.den));
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parse "p", "p/q".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    /// Power of two 2^k for possibly negative k (|k| <= 62).
    static Rational pow2(int k) {
        if (k < -62 || k > 62) throw std::overflow_error("rational: 2^k out of range");
        if (k >= 0) return Rational(1LL << k, 1);
        return Rational(1, 1LL << (-k));
    }
};

namespace detail {

inline int bit_width_u128(unsigned __int128 v) {
    auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(v));
}

} // namespace detail

/// Exact three-way comparison of a nonnegative rational against a
/// nonnegative finite double (which is itself the rational M * 2^E).
/// Returns -1, 0, +1. Never rounds: the comparison is decided either
/// by magnitude (bit widths) or by an exact 128-bit integer compare.
inline int compare_rational_double(const Rational& a, double d) {
    if (std::isnan(d)) throw std::invalid_argument("compare_rational_double: nan");
    if (a.num < 0 || d < 0) throw std::invalid_argument("compare_rational_double: magnitudes only");
    if (std::isinf(d)) return -1;
    if (d == 0.0) return a.num == 0 ? 0 : 1;
    if (a.num == 0) return -1;

    int e2;
    double m = std::frexp(d, &e2);              // d = m * 2^e2, m in [1/2, 1)
    auto M = static_cast<std::uint64_t>(std::ldexp(m, 53)); // exact integer
    int E = e2 - 53;                            // d = M * 2^E

    // Compare a.num vs a.den * M * 2^E.
    unsigned __int128 lhs = static_cast<unsigned __int128>(a.num);
    unsigned __int128 rhs = static_cast<unsigned __int128>(a.den) * M;
    int bl = detail::bit_width_u128(lhs);
    int br = detail::bit_width_u128(rhs) + E;   // conceptual width of rhs<<E
    if (bl > br + 1) return 1;
    if (br > bl + 1) return -1;
    // Widths are close, so the needed shift fits in 128 bits.
    if (E >= 0) {
        if (detail::bit_width_u128(rhs) + E > 127) return -1;
        rhs <<= E;
    } else {
        if (detail::bit_width_u128(lhs) + (-E) > 127) return 1;
        lhs <<= -E;
    }
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

} // namespace lacuna

#endif
