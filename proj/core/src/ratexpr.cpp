#include "specrec/ratexpr.hpp"

#include <algorithm>

namespace specrec {

void RatExpr::reduce() {
    if (den_.is_zero()) throw arithmetic_error("RatExpr: zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::one();
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = MultiPoly::divexact(num_, g);
            den_ = MultiPoly::divexact(den_, g);
        }
    }
    Rational c = den_.content();
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatExpr::RatExpr(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

RatExpr RatExpr::operator-() const {
    RatExpr r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatExpr(a.num_ + b.num_, a.den_);
    return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
    if (a.is_zero() || b.is_zero()) return RatExpr();
    // cross-reduce before multiplying to keep intermediates small
    MultiPoly g1 = MultiPoly::gcd(a.num_, b.den_);
    MultiPoly g2 = MultiPoly::gcd(b.num_, a.den_);
    MultiPoly n1 = g1.is_constant() ? a.num_ : MultiPoly::divexact(a.num_, g1);
    MultiPoly d2 = g1.is_constant() ? b.den_ : MultiPoly::divexact(b.den_, g1);
    MultiPoly n2 = g2.is_constant() ? b.num_ : MultiPoly::divexact(b.num_, g2);
    MultiPoly d1 = g2.is_constant() ? a.den_ : MultiPoly::divexact(a.den_, g2);
    return RatExpr(n1 * n2, d1 * d2);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
    if (b.is_zero()) throw arithmetic_error("RatExpr: division by zero");
    RatExpr binv;
    binv.num_ = b.den_;
    binv.den_ = b.num_;
    return a * RatExpr(binv.num_, binv.den_);
}

RatExpr RatExpr::inverse() const {
    if (is_zero()) throw arithmetic_error("RatExpr: inverse of zero");
    return RatExpr(den_, num_);
}

RatExpr RatExpr::pow(const RatExpr& b, long e) {
    if (e < 0) return pow(b.inverse(), -e);
    RatExpr r(1L);
    RatExpr base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatExpr RatExpr::derivative(int v) const {
    if (!depends_on(v)) return RatExpr();
    if (den_.is_constant())
        return RatExpr(num_.derivative(v), den_);
    MultiPoly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RatExpr(std::move(n), den_ * den_);
}

namespace {
RatExpr eval_poly_at(const MultiPoly& p, int v, const RatExpr& value) {
    Poly<MultiPoly> u = p.to_univar(v);
    RatExpr r;
    for (int e = u.degree(); e >= 0; --e) r = r * value + RatExpr(u.coeff(e));
    return r;
}
} // namespace

RatExpr RatExpr::subst(int v, const RatExpr& value) const {
    if (!depends_on(v)) return *this;
    RatExpr n = eval_poly_at(num_, v, value);
    RatExpr d = eval_poly_at(den_, v, value);
    return n / d;
}

RatExpr RatExpr::eval_var(int v, const Rational& x) const {
    if (!depends_on(v)) return *this;
    MultiPoly n = num_.eval_var(v, x);
    MultiPoly d = den_.eval_var(v, x);
    if (d.is_zero()) throw arithmetic_error("RatExpr::eval_var: denominator vanishes");
    return RatExpr(std::move(n), std::move(d));
}

RatExpr RatExpr::rename(const std::vector<int>& perm) const {
    auto apply = [&](const MultiPoly& p) {
        MultiPoly r;
        r.t.reserve(p.t.size());
        for (auto& [m, c] : p.t) {
            Mono m2{};
            for (int i = 0; i < kMaxVars; ++i) {
                if (!m[i]) continue;
                int j = (i < (int)perm.size()) ? perm[i] : i;
                m2[j] = static_cast<uint16_t>(m2[j] + m[i]);
            }
            r.t.push_back({m2, c});
        }
        std::sort(r.t.begin(), r.t.end(),
                  [](const auto& x, const auto& y) { return y.first < x.first; });
        return r;
    };
    RatExpr r;
    r.num_ = apply(num_);
    r.den_ = apply(den_);
    // a variable bijection preserves coprimality but can reorder terms, so the
    // sign/content normalization of the denominator must be redone
    Rational c = r.den_.content();
    if (c != 1) {
        Rational inv = Rational(1) / c;
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

std::string RatExpr::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

std::string RatExpr::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < kMaxVars; ++i) names.push_back("z" + std::to_string(i + 1));
    return str(names);
}

} // namespace specrec
