#ifndef SPECREC_MULTIPOLY_HPP
#define SPECREC_MULTIPOLY_HPP

#include <array>
#include <vector>
#include <string>
#include <cstdint>
#include "rational.hpp"
#include "poly.hpp"

namespace specrec {

// Global variable universe. Slots 0..9 are curve-point variables ("z1".."z10"
// in printed form); the last slots are scratch (residue variable, interpolation).
constexpr int kMaxVars = 12;

using Mono = std::array<uint16_t, kMaxVars>;

inline bool mono_less(const Mono& a, const Mono& b) { return a < b; } // lex, var 0 strongest

// Sparse multivariate polynomial over Q. Terms sorted in descending lex order.
class MultiPoly {
public:
    std::vector<std::pair<Mono, Rational>> t;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(Rational q);
    static MultiPoly one() { return constant(Rational(1)); }
    static MultiPoly var(int v, int pow = 1);

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first == Mono{}); }
    Rational constant_value() const;

    int degree(int v) const;
    int total_degree() const;
    uint32_t var_mask() const;
    bool depends_on(int v) const { return degree(v) > 0; }

    bool operator==(const MultiPoly& o) const { return t == o.t; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Rational& q) const;

    MultiPoly derivative(int v) const;

    // rational content (gcd of coefficients, sign of the leading term)
    Rational content() const;
    MultiPoly primitive() const;

    // exact division; throws arithmetic_error if not divisible
    static MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);
    static bool try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& q);

    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // view as univariate in v with coefficients free of v
    Poly<MultiPoly> to_univar(int v) const;
    static MultiPoly from_univar(const Poly<MultiPoly>& p, int v);

    // substitute a rational value for variable v
    MultiPoly eval_var(int v, const Rational& x) const;

    static MultiPoly pow(MultiPoly base, long e);

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;
};

} // namespace specrec

#endif
