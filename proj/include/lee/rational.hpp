#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace lee {

// Exact rational on int64, always kept reduced with positive denominator.
// Magnitudes here stay tiny (bound values at desk scale), so no overflow
// guards beyond the zero-denominator check.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    // smallest integer >= num/den
    std::int64_t ceil() const {
        std::int64_t q = num / den, r = num % den;
        return q + (r > 0 ? 1 : 0);
    }
    double to_double() const { return double(num) / double(den); }
};

} // namespace lee
