#ifndef SPECREC_RATIONAL_HPP
#define SPECREC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace specrec {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(|num|, den) = 1 and den >= 1,
// which is exactly the canonical form the rest of the library assumes.
using Rational = boost::multiprecision::cpp_rational;

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw arithmetic_error("rat_pow: zero to negative power");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational r(1), b(base);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// gcd on Q: gcd of numerators over lcm of denominators. Nonnegative; gcd(0,0)=0.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    Integer n = gcd(num(a), num(b));
    Integer d = lcm(den(a), den(b));
    return Rational(n, d);
}

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace specrec

#endif
