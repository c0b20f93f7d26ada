#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace foliage {

/// Exact nonnegative rational on 64-bit parts. Density maxima must not be
/// perturbed by rounding (ties like W = 2 exactly decide ceilings), so all
/// comparisons cross-multiply in 128 bits.
struct Rational {
    long long num = 0;
    long long den = 1; // > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        assert(d != 0);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    static int compare(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }

    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    long long ceil() const {
        if (num <= 0) return num == 0 ? 0 : -((-num) / den);
        return (num + den - 1) / den;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace foliage
