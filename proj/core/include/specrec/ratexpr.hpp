#ifndef SPECREC_RATEXPR_HPP
#define SPECREC_RATEXPR_HPP

#include "multipoly.hpp"

namespace specrec {

// Multivariate rational expression over Q in canonical form:
// gcd(num, den) = 1, den integer-primitive with positive leading coefficient.
// Equality of canonical forms is structural equality.
class RatExpr {
    MultiPoly num_, den_;
    void reduce();

public:
    RatExpr() : den_(MultiPoly::one()) {}
    RatExpr(long v) : num_(MultiPoly::constant(Rational(v))), den_(MultiPoly::one()) {}
    RatExpr(int v) : RatExpr(static_cast<long>(v)) {}
    RatExpr(Rational q) : num_(MultiPoly::constant(std::move(q))), den_(MultiPoly::one()) {}
    RatExpr(MultiPoly p) : num_(std::move(p)), den_(MultiPoly::one()) {}
    RatExpr(MultiPoly n, MultiPoly d);

    static RatExpr var(int v) { return RatExpr(MultiPoly::var(v)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatExpr& o) const { return !(*this == o); }

    RatExpr operator-() const;
    friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
    RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
    RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
    RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
    RatExpr& operator/=(const RatExpr& o) { return *this = *this / o; }

    RatExpr inverse() const;
    static RatExpr pow(const RatExpr& b, long e);

    RatExpr derivative(int v) const;

    bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }
    uint32_t var_mask() const { return num_.var_mask() | den_.var_mask(); }

    // substitute an expression for variable v
    RatExpr subst(int v, const RatExpr& value) const;
    // substitute a rational constant for variable v (den must not vanish)
    RatExpr eval_var(int v, const Rational& x) const;
    // rename variables; `perm[i] = j` sends variable i to variable j.
    // Must be injective on the variables actually present.
    RatExpr rename(const std::vector<int>& perm) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;
};

} // namespace specrec

#endif
