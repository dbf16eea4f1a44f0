#ifndef SPECREC_NUMBERRING_HPP
#define SPECREC_NUMBERRING_HPP

#include <memory>
#include <utility>
#include "poly.hpp"
#include "ratexpr.hpp"

namespace specrec {

// Raised when arithmetic in Q[a]/(P) meets a zero divisor: P splits as
// factor * (P/factor) and the computation must be redone per factor.
struct zero_divisor_split : std::exception {
    Poly<Rational> factor;
    explicit zero_divisor_split(Poly<Rational> f) : factor(std::move(f)) {}
    const char* what() const noexcept override { return "zero divisor in quotient ring"; }
};

// An exact algebraic number: a root of a squarefree rational polynomial,
// together with an index selecting one root when an embedding is required
// (roots ordered real-ascending first, then by conjugate pairs).
struct AlgebraicNumber {
    Poly<Rational> minimal_polynomial;
    Poly<Rational> representation; // element of Q[a]/(minimal_polynomial)
    int root_index = 0;

    static AlgebraicNumber generator(Poly<Rational> minpoly, int root_index = 0) {
        return {std::move(minpoly), Poly<Rational>::x(), root_index};
    }
    static AlgebraicNumber rational(const Rational& q) {
        return {Poly<Rational>::x() - Poly<Rational>(q), Poly<Rational>(q), 0};
    }
    bool is_rational() const { return minimal_polynomial.degree() == 1; }
    Rational rational_value() const {
        return -minimal_polynomial.coeff(0) / minimal_polynomial.coeff(1);
    }
};

// Shared description of the extension Q(a), P squarefree (not necessarily
// irreducible; zero divisors raise zero_divisor_split for the caller to handle).
struct ExtCtx {
    Poly<Rational> modulus;
    std::vector<Rational> psums; // power sums of the roots, 1..deg

    explicit ExtCtx(Poly<Rational> p) : modulus(std::move(p)) {
        psums = power_sums(modulus, modulus.degree());
    }
};

// Element of RatExpr ⊗ Q[a]/(P): polynomial in the generator with RatExpr
// coordinates. A null context marks a plain base scalar.
class ExtElem {
    std::shared_ptr<const ExtCtx> ctx_;
    Poly<RatExpr> v_; // degree < deg(P)

    static Poly<RatExpr> lift(const Poly<Rational>& p) {
        Poly<RatExpr> r;
        r.c.reserve(p.c.size());
        for (auto& c : p.c) r.c.push_back(RatExpr(c));
        r.trim();
        return r;
    }

    void reduce() {
        if (!ctx_) return;
        Poly<RatExpr> m = lift(ctx_->modulus);
        if (v_.degree() >= m.degree()) v_ = v_ % m;
    }

public:
    ExtElem() = default;
    ExtElem(long n) : v_(Poly<RatExpr>(RatExpr(n))) {}
    ExtElem(int n) : ExtElem(static_cast<long>(n)) {}
    explicit ExtElem(RatExpr r) : v_(Poly<RatExpr>(std::move(r))) {}
    ExtElem(std::shared_ptr<const ExtCtx> ctx, Poly<RatExpr> v) : ctx_(std::move(ctx)), v_(std::move(v)) {
        reduce();
    }

    static ExtElem generator(std::shared_ptr<const ExtCtx> ctx) {
        return ExtElem(std::move(ctx), Poly<RatExpr>::x());
    }
    static ExtElem scalar(std::shared_ptr<const ExtCtx> ctx, RatExpr r) {
        return ExtElem(std::move(ctx), Poly<RatExpr>(std::move(r)));
    }

    const std::shared_ptr<const ExtCtx>& ctx() const { return ctx_; }
    const Poly<RatExpr>& coords() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    bool operator==(const ExtElem& o) const { return v_ == o.v_; }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    static std::shared_ptr<const ExtCtx> join(const ExtElem& a, const ExtElem& b) {
        if (a.ctx_ && b.ctx_) {
            if (a.ctx_ != b.ctx_ && !(a.ctx_->modulus == b.ctx_->modulus))
                throw arithmetic_error("ExtElem: mixed extension contexts");
            return a.ctx_;
        }
        return a.ctx_ ? a.ctx_ : b.ctx_;
    }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
        return ExtElem(join(a, b), a.v_ + b.v_);
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
        return ExtElem(join(a, b), a.v_ - b.v_);
    }
    ExtElem operator-() const { return ExtElem(ctx_, -v_); }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        return ExtElem(join(a, b), a.v_ * b.v_);
    }

    ExtElem inverse() const {
        if (v_.is_zero()) throw arithmetic_error("ExtElem: inverse of zero");
        if (!ctx_ || v_.degree() == 0) {
            ExtElem r;
            r.ctx_ = ctx_;
            r.v_ = Poly<RatExpr>(v_.coeff(0).inverse());
            return r;
        }
        Poly<RatExpr> m = lift(ctx_->modulus);
        auto [g, s, t] = Poly<RatExpr>::xgcd(v_, m);
        (void)t;
        // xgcd normalizes g monic, so deg 0 means s*v == 1 (mod modulus)
        if (g.degree() == 0) return ExtElem(ctx_, s);
        // nontrivial gcd divides the rational modulus, so it has rational coefficients
        Poly<Rational> f;
        for (int i = 0; i <= g.degree(); ++i) {
            const RatExpr& c = g.coeff(i);
            if (!c.is_constant()) throw arithmetic_error("ExtElem: non-rational modulus factor");
            f.c.push_back(c.constant_value());
        }
        f.trim();
        throw zero_divisor_split(f.monic());
    }

    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }

    // trace down to the base field: sum over the roots of the modulus
    RatExpr trace() const {
        if (!ctx_) return v_.coeff(0) * RatExpr(1L);
        RatExpr s = v_.coeff(0) * RatExpr((long)ctx_->modulus.degree());
        for (int k = 1; k <= v_.degree(); ++k) s += v_.coeff(k) * RatExpr(ctx_->psums[k]);
        return s;
    }
};

// Trace form on K[r]/(E) for a generic field K: Tr(elem mod E).
template <class K>
K quotient_trace(const Poly<K>& elem, const Poly<K>& E) {
    Poly<K> e = elem % E;
    std::vector<K> ps = power_sums(E, std::max(0, e.degree()));
    K s = e.coeff(0) * K((long)E.degree());
    for (int k = 1; k <= e.degree(); ++k) s = s + e.coeff(k) * ps[k];
    return s;
}

} // namespace specrec

#endif
