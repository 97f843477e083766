#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bookem {

// Exact rational on 64-bit numerator/denominator. Density bounds are decided
// by ceilings of ratios, so no floating point anywhere near these values.
// Intermediate products run through __int128 and throw on overflow of the
// reduced result.
struct Rational {
    long long num = 0;
    long long den = 1;  // always > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    static Rational from_int128(__int128 n, __int128 d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational operator+(const Rational& o) const {
        return from_int128(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                           static_cast<__int128>(den) * o.den);
    }
    Rational operator-(const Rational& o) const {
        return from_int128(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                           static_cast<__int128>(den) * o.den);
    }
    Rational operator*(const Rational& o) const {
        return from_int128(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("rational: division by zero");
        return from_int128(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
    }

    // Smallest integer >= value.
    long long ceil() const {
        long long q = num / den;
        long long r = num % den;
        return r > 0 ? q + 1 : q;
    }
    long long floor() const {
        long long q = num / den;
        long long r = num % den;
        return r < 0 ? q - 1 : q;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational Rational::from_int128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("rational: value exceeds 64-bit range");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
}

}  // namespace bookem
