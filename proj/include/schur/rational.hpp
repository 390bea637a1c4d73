#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schur {

/// Exact arbitrary-precision integer and rational types. All coefficient and
/// exponent arithmetic in this library is exact; there is no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Floor modulus with a positive modulus: result in [0, m).
inline Int floor_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// gcd of two rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
/// gcd(x, 0) = |x|; gcd(0, 0) = 0.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    Int num = boost::multiprecision::gcd(rat_num(a), rat_num(b));
    Int den = boost::multiprecision::lcm(rat_den(a), rat_den(b));
    return Rat(num, den);
}

/// lcm of two rationals: lcm(p1/q1, p2/q2) = lcm(p1,p2)/gcd(q1,q2).
/// lcm(x, 0) = 0.
inline Rat rat_lcm(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) return Rat(0);
    Int num = boost::multiprecision::lcm(rat_num(a), rat_num(b));
    Int den = boost::multiprecision::gcd(rat_den(a), rat_den(b));
    return Rat(num, den);
}

/// Reduced textual form: "p/q", or plain "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
    Int n = rat_num(q);
    Int d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

/// Strict parse of "[+-]digits" or "[+-]digits/digits". Returns nullopt on any
/// malformed token, including a zero denominator.
inline std::optional<Rat> parse_rational(std::string_view tok) {
    if (tok.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (tok[i] == '+' || tok[i] == '-') {
        neg = (tok[i] == '-');
        ++i;
    }
    auto read_digits = [&](Int& out) -> bool {
        if (i >= tok.size() || tok[i] < '0' || tok[i] > '9') return false;
        out = 0;
        while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
            out = out * 10 + (tok[i] - '0');
            ++i;
        }
        return true;
    };
    Int num;
    if (!read_digits(num)) return std::nullopt;
    Int den = 1;
    if (i < tok.size() && tok[i] == '/') {
        ++i;
        if (!read_digits(den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    if (i != tok.size()) return std::nullopt;
    Rat q(num, den);
    if (neg) q = -q;
    return q;
}

} // namespace schur
