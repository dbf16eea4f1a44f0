#ifndef SPECREC_POLY_HPP
#define SPECREC_POLY_HPP

#include <vector>
#include <utility>
#include <tuple>
#include <cassert>
#include "rational.hpp"

namespace specrec {

// Dense univariate polynomial over a field-like coefficient type K.
// K needs: K() == additive zero, K(int), ring ops, division, ==.
template <class K>
class Poly {
public:
    std::vector<K> c; // c[i] multiplies x^i; no trailing zeros

    Poly() = default;
    explicit Poly(K k) {
        if (!(k == K())) c.push_back(std::move(k));
    }
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    static Poly x(int pow = 1) {
        Poly p;
        p.c.assign(pow + 1, K());
        p.c[pow] = K(1);
        return p;
    }
    static Poly from_coeffs(std::vector<K> v) {
        Poly p;
        p.c = std::move(v);
        p.trim();
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const K& lc() const {
        assert(!c.empty());
        return c.back();
    }
    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(); }

    void trim() {
        while (!c.empty() && c.back() == K()) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& k : r.c) k = K() - k;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] + o.c[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] - o.c[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K()) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator*(const K& k) const {
        if (k == K()) return Poly();
        Poly r(*this);
        for (auto& x : r.c) x = x * k;
        r.trim();
        return r;
    }
    Poly operator/(const K& k) const {
        Poly r(*this);
        for (auto& x : r.c) x = x / k;
        return r;
    }

    // Euclidean division; requires b != 0 and K a field.
    static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
        assert(!b.is_zero());
        Poly q;
        int db = b.degree();
        if (a.degree() >= db) q.c.assign(a.degree() - db + 1, K());
        while (!a.is_zero() && a.degree() >= db) {
            int k = a.degree() - db;
            K f = a.lc() / b.lc();
            q.c[k] = f;
            for (int i = 0; i <= db; ++i) a.c[k + i] = a.c[k + i] - f * b.c[i];
            a.trim();
        }
        q.trim();
        return {q, a};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    static Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw arithmetic_error("Poly::divexact: nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this / lc();
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
    static std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b) {
        Poly s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
            Poly s2 = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            Poly t2 = t0 - q * t1;
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (a.is_zero()) return {a, s0, t0};
        K l = a.lc();
        return {a / l, s0 / l, t0 / l};
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K((long)i);
        r.trim();
        return r;
    }

    K eval(const K& v) const {
        K r = K();
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * v + *it;
        return r;
    }

    // P(x + a) by Horner in (x + a).
    Poly taylor_shift(const K& a) const {
        Poly r;
        Poly xa = x() + Poly(a);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * xa + Poly(*it);
        return r;
    }

    Poly reversed(int n = -1) const {
        // coefficient reversal relative to degree n (default: own degree)
        int d = n < 0 ? degree() : n;
        assert(d >= degree());
        Poly r;
        r.c.assign(d + 1, K());
        for (size_t i = 0; i < c.size(); ++i) r.c[d - i] = c[i];
        r.trim();
        return r;
    }

    bool is_squarefree() const {
        if (is_zero()) return false;
        if (degree() == 0) return true;
        return gcd(*this, derivative()).degree() == 0;
    }

    Poly squarefree_part() const {
        if (is_zero() || degree() == 0) return monic();
        Poly g = gcd(*this, derivative());
        if (g.degree() == 0) return monic();
        return divexact(*this, g).monic();
    }

    static Poly pow(Poly b, long e) {
        Poly r = one();
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Resultant via the Euclidean remainder sequence (K a field).
    static K resultant(Poly a, Poly b) {
        if (a.is_zero() || b.is_zero()) throw arithmetic_error("resultant of zero polynomial");
        K acc = K(1);
        bool negate = false;
        while (b.degree() > 0) {
            Poly r = a % b;
            if (r.is_zero()) return K();
            int da = a.degree(), db = b.degree(), dr = r.degree();
            // res(a,b) = (-1)^(da*db) lc(b)^(da-dr) res(b,r)
            if ((da & 1) && (db & 1)) negate = !negate;
            K l = b.lc();
            K p = K(1);
            for (int i = 0; i < da - dr; ++i) p = p * l;
            acc = acc * p;
            a = std::move(b);
            b = std::move(r);
        }
        // b constant nonzero: res(a, b) = b^deg(a)
        K l = b.lc();
        K p = K(1);
        for (int i = 0; i < a.degree(); ++i) p = p * l;
        acc = acc * p;
        if (negate) acc = K() - acc;
        return acc;
    }
};

// Newton power sums p_1..p_n of the roots of a monic-able polynomial.
// p_k = sum of k-th powers of roots, derived from the coefficients.
template <class K>
std::vector<K> power_sums(const Poly<K>& f, int n) {
    int d = f.degree();
    assert(d >= 1);
    // monic coefficients e_i with sign convention f = x^d - e1 x^{d-1} + e2 x^{d-2} - ...
    std::vector<K> e(d + 1, K());
    for (int i = 1; i <= d; ++i) {
        K v = f.coeff(d - i) / f.lc();
        e[i] = (i % 2) ? (K() - v) : v;
    }
    std::vector<K> p(n + 1, K());
    for (int k = 1; k <= n; ++k) {
        K s = K();
        for (int i = 1; i < k && i <= d; ++i) {
            K term = e[i] * p[k - i];
            s = (i % 2) ? s + term : s - term;
        }
        if (k <= d) {
            K term = e[k] * K((long)k);
            s = (k % 2) ? s + term : s - term;
        }
        p[k] = s;
    }
    return p;
}

} // namespace specrec

#endif
