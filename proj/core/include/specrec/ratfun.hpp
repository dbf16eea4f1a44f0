#ifndef SPECREC_RATFUN_HPP
#define SPECREC_RATFUN_HPP

#include "poly.hpp"
#include "series.hpp"

namespace specrec {

// Univariate rational function over a field K, canonical form:
// gcd(num, den) = 1 and den monic.
template <class K>
class RationalFunction {
    void reduce() {
        if (den.is_zero()) throw arithmetic_error("RationalFunction: zero denominator");
        if (num.is_zero()) {
            den = Poly<K>::one();
            return;
        }
        Poly<K> g = Poly<K>::gcd(num, den);
        if (g.degree() > 0) {
            num = Poly<K>::divexact(num, g);
            den = Poly<K>::divexact(den, g);
        }
        K l = den.lc();
        if (!(l == K(1))) {
            num = num / l;
            den = den / l;
        }
    }

public:
    Poly<K> num, den;

    RationalFunction() : den(Poly<K>::one()) {}
    RationalFunction(Poly<K> n) : num(std::move(n)), den(Poly<K>::one()) {}
    RationalFunction(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    explicit RationalFunction(K k) : num(Poly<K>(std::move(k))), den(Poly<K>::one()) {}

    static RationalFunction x() { return RationalFunction(Poly<K>::x()); }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
    bool is_polynomial() const { return den.degree() == 0; }

    // degree as a map of the sphere
    int map_degree() const { return std::max(num.degree(), den.degree()); }

    bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num = -num;
        r.den = den;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.num, a.den * b.den);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw arithmetic_error("RationalFunction: division by zero");
        return RationalFunction(a.num * b.den, a.den * b.num);
    }

    RationalFunction derivative() const {
        return RationalFunction(num.derivative() * den - num * den.derivative(), den * den);
    }

    K eval(const K& v) const {
        K d = den.eval(v);
        if (d == K()) throw arithmetic_error("RationalFunction: pole at evaluation point");
        return num.eval(v) / d;
    }

    // composition f(g) for rational g
    RationalFunction compose(const RationalFunction& g) const {
        RationalFunction n, d;
        for (int i = num.degree(); i >= 0; --i) n = n * g + RationalFunction(num.coeff(i));
        for (int i = den.degree(); i >= 0; --i) d = d * g + RationalFunction(den.coeff(i));
        return n / d;
    }

    // pullback under z -> 1/w (the chart at infinity)
    RationalFunction at_infinity_chart() const {
        int d = std::max(num.degree(), den.degree());
        Poly<K> n = num.reversed(d), dd = den.reversed(d);
        return RationalFunction(n, dd);
    }

    // Laurent expansion about a finite center
    LaurentSeries<K> series_at(const K& center, int order) const {
        Poly<K> n = num.taylor_shift(center), d = den.taylor_shift(center);
        return series_from_polys(n, d, order);
    }

    // Laurent expansion at infinity in the local coordinate w = 1/z
    LaurentSeries<K> series_at_infinity(int order) const {
        RationalFunction f = at_infinity_chart();
        return series_from_polys(f.num, f.den, order);
    }

    static LaurentSeries<K> series_from_polys(const Poly<K>& n, const Poly<K>& d, int order) {
        if (d.is_zero()) throw arithmetic_error("series of 1/0");
        if (n.is_zero()) return LaurentSeries<K>::zero(order);
        int vn = 0, vd = 0;
        while (n.coeff(vn) == K()) ++vn;
        while (d.coeff(vd) == K()) ++vd;
        int val = vn - vd;
        if (order <= val) return LaurentSeries<K>::zero(order);
        int terms = order - val; // unit-series coefficients of the quotient
        LaurentSeries<K> ns = LaurentSeries<K>::zero(terms), ds = LaurentSeries<K>::zero(terms);
        for (int i = 0; i < terms; ++i) {
            ns.set(i, n.coeff(vn + i));
            ds.set(i, d.coeff(vd + i));
        }
        LaurentSeries<K> q = ns * ds.inverse();
        return q.truncated(terms).shifted(val);
    }
};

} // namespace specrec

#endif
