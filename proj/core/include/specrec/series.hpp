#ifndef SPECREC_SERIES_HPP
#define SPECREC_SERIES_HPP

#include <map>
#include <vector>
#include <algorithm>
#include "rational.hpp"
#include "poly.hpp"

namespace specrec {

// order sentinel for series known exactly (Laurent polynomials)
constexpr int kExactOrder = 1 << 28;

struct logarithmic_obstruction : arithmetic_error {
    logarithmic_obstruction()
        : arithmetic_error("antiderivative of a series with nonzero residue term") {}
};

// Truncated Laurent series around a (separately recorded) center.
// Coefficients live at integer exponents < trunc; exponents >= trunc unknown.
template <class K>
class LaurentSeries {
public:
    std::map<int, K> a;
    int trunc = kExactOrder;

    LaurentSeries() = default;
    explicit LaurentSeries(int truncation) : trunc(truncation) {}

    static LaurentSeries zero(int truncation = kExactOrder) { return LaurentSeries(truncation); }
    static LaurentSeries from_const(K c, int truncation = kExactOrder) {
        LaurentSeries s(truncation);
        s.set(0, std::move(c));
        return s;
    }
    static LaurentSeries t(int pow = 1, int truncation = kExactOrder) {
        LaurentSeries s(truncation);
        s.set(pow, K(1));
        return s;
    }

    void set(int k, K c) {
        if (k >= trunc) return;
        if (c == K())
            a.erase(k);
        else
            a[k] = std::move(c);
    }
    K coeff(int k) const {
        auto it = a.find(k);
        return it == a.end() ? K() : it->second;
    }

    // valuation: exponent of lowest visible nonzero term, trunc if none
    int valuation() const { return a.empty() ? trunc : a.begin()->first; }
    bool is_visibly_zero() const { return a.empty(); }
    bool is_exact() const { return trunc >= kExactOrder; }

    LaurentSeries truncated(int T) const {
        LaurentSeries r(std::min(T, trunc));
        for (auto& [k, c] : a)
            if (k < r.trunc) r.a.insert({k, c});
        return r;
    }

    LaurentSeries operator-() const {
        LaurentSeries r(*this);
        for (auto& [k, c] : r.a) c = K() - c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
        LaurentSeries r(std::min(x.trunc, y.trunc));
        for (auto& [k, c] : x.a)
            if (k < r.trunc) r.a[k] = c;
        for (auto& [k, c] : y.a) {
            if (k >= r.trunc) continue;
            auto it = r.a.find(k);
            if (it == r.a.end())
                r.a[k] = c;
            else {
                it->second = it->second + c;
                if (it->second == K()) r.a.erase(it);
            }
        }
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) {
        return x + (-y);
    }

    friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
        if (x.is_visibly_zero() && x.is_exact()) return x;
        if (y.is_visibly_zero() && y.is_exact()) return y;
        long tx = (long)x.trunc + (long)y.valuation();
        long ty = (long)y.trunc + (long)x.valuation();
        long T = std::min({tx, ty, (long)kExactOrder});
        LaurentSeries r((int)T);
        for (auto& [i, ci] : x.a)
            for (auto& [j, cj] : y.a) {
                if ((long)i + j >= T) continue;
                K prod = ci * cj;
                if (prod == K()) continue;
                auto it = r.a.find(i + j);
                if (it == r.a.end())
                    r.a[i + j] = std::move(prod);
                else {
                    it->second = it->second + prod;
                    if (it->second == K()) r.a.erase(it);
                }
            }
        return r;
    }
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries operator*(const K& k) const {
        LaurentSeries r(trunc);
        if (k == K()) return r;
        for (auto& [e, c] : a) {
            K p = c * k;
            if (!(p == K())) r.a[e] = std::move(p);
        }
        return r;
    }

    LaurentSeries shifted(int m) const {
        LaurentSeries r((int)std::min((long)kExactOrder, (long)trunc + m));
        for (auto& [k, c] : a) r.a[k + m] = c;
        return r;
    }

    // multiplicative inverse; lowest visible term must be the true valuation
    LaurentSeries inverse() const {
        if (a.empty()) throw arithmetic_error("LaurentSeries: inverse of (visible) zero");
        int v = valuation();
        if (is_exact()) {
            if (a.size() == 1) {
                LaurentSeries r;
                r.set(-v, K(1) / a.begin()->second);
                return r;
            }
            throw arithmetic_error("LaurentSeries: inverse of exact multi-term series needs truncation");
        }
        int n = trunc - v; // unit-part coefficients known: u_0..u_{n-1}
        std::vector<K> rc(n);
        rc[0] = K(1) / coeff(v);
        for (int k = 1; k < n; ++k) {
            K s = K();
            for (auto& [j, uj] : a) {
                int jj = j - v;
                if (jj < 1 || jj > k) continue;
                if (!(rc[k - jj] == K())) s = s + uj * rc[k - jj];
            }
            rc[k] = (K() - s) * rc[0];
        }
        LaurentSeries out(trunc - 2 * v);
        for (int k = 0; k < n; ++k)
            if (!(rc[k] == K()) && k - v < out.trunc) out.a[k - v] = rc[k];
        return out;
    }

    friend LaurentSeries operator/(const LaurentSeries& x, const LaurentSeries& y) {
        return x * y.inverse();
    }

    LaurentSeries derivative() const {
        LaurentSeries r((int)std::min((long)kExactOrder, (long)trunc - 1));
        for (auto& [k, c] : a) {
            if (k == 0) continue;
            K p = c * K((long)k);
            if (!(p == K())) r.a[k - 1] = std::move(p);
        }
        return r;
    }

    // term-wise antiderivative, constant of integration zero
    LaurentSeries antiderivative() const {
        if (!(coeff(-1) == K())) throw logarithmic_obstruction();
        LaurentSeries r((int)std::min((long)kExactOrder, (long)trunc + 1));
        for (auto& [k, c] : a) {
            if (k == -1) continue;
            r.a[k + 1] = c / K((long)(k + 1));
        }
        return r;
    }

    K residue() const { return coeff(-1); }

    static LaurentSeries pow_series(const LaurentSeries& b, long e, int T) {
        LaurentSeries r = from_const(K(1), T);
        LaurentSeries base = b.truncated(T);
        while (e) {
            if (e & 1) r = (r * base).truncated(T);
            base = (base * base).truncated(T);
            e >>= 1;
        }
        return r;
    }

    // substitute another series for the parameter; inner valuation must be >= 1,
    // outer must have no pole part
    LaurentSeries compose(const LaurentSeries& inner) const {
        if (inner.valuation() < 1) throw arithmetic_error("compose: inner valuation must be >= 1");
        if (!a.empty() && valuation() < 0)
            throw arithmetic_error("compose: outer series has a pole part");
        int T = std::min(trunc, inner.trunc);
        LaurentSeries r = zero(T);
        for (auto& [k, c] : a) {
            if (k >= T) break;
            r += pow_series(inner, k, T) * c;
        }
        return r;
    }

    // functional inverse w with this(w(v)) = v + O(v^{nterms+1}); valuation must be 1
    LaurentSeries reversion(int nterms) const {
        if (valuation() != 1) throw arithmetic_error("reversion needs valuation 1");
        K c1 = coeff(1);
        LaurentSeries w(nterms + 1);
        w.set(1, K(1) / c1);
        for (int n = 2; n <= nterms; ++n) {
            LaurentSeries comp = truncated(n + 1).compose(w.truncated(n + 1));
            K err = comp.coeff(n);
            w.set(n, (K() - err) / c1);
        }
        return w;
    }
};

// Evaluate a univariate polynomial with coefficients CK at a series over K.
template <class K, class CK, class Embed>
LaurentSeries<K> eval_poly_series(const Poly<CK>& p, const LaurentSeries<K>& s, int T, Embed embed) {
    LaurentSeries<K> r = LaurentSeries<K>::zero(T);
    for (int i = p.degree(); i >= 0; --i) {
        r = (r * s).truncated(T);
        r += LaurentSeries<K>::from_const(embed(p.coeff(i)), T);
    }
    return r;
}

} // namespace specrec

#endif
