#ifndef SPECREC_RESIDUE_HPP
#define SPECREC_RESIDUE_HPP

#include <atomic>
#include <string>
#include <vector>
#include "poly.hpp"
#include "series.hpp"
#include "numberring.hpp"

namespace specrec {

// Counters for the dual-route residue checks. Every fiber/cluster residue in
// the mixed recursion is computed twice (partial-fraction leading-coefficient
// route vs. quotient-ring trace / local series route); disagreements are a bug.
struct ResidueStats {
    static std::atomic<long> route_checks;
    static std::atomic<long> route_mismatches;
    static void reset();
    static long checks() { return route_checks.load(); }
    static long mismatches() { return route_mismatches.load(); }
};

// ---------------------------------------------------------------------------
// Partial fractions with respect to pairwise coprime squarefree clusters.

// Extract from D the maximal divisor whose roots lie among the roots of C.
// Returns {E, D/E}.
template <class K>
std::pair<Poly<K>, Poly<K>> extract_cluster_factor(Poly<K> D, const Poly<K>& C) {
    Poly<K> E = Poly<K>::one();
    while (true) {
        Poly<K> g = Poly<K>::gcd(D, C);
        if (g.degree() == 0) break;
        E = E * g;
        D = Poly<K>::divexact(D, g);
    }
    return {E, D};
}

// f = N/D split as poly + sum A_i/F_i over pairwise coprime F_i (all of positive
// degree; F_i need not be squarefree). deg A_i < deg F_i.
template <class K>
struct PartialFractions {
    Poly<K> poly_part;
    std::vector<Poly<K>> numerators;
};

template <class K>
PartialFractions<K> partial_fractions(const Poly<K>& N, const std::vector<Poly<K>>& factors) {
    PartialFractions<K> out;
    out.numerators.assign(factors.size(), Poly<K>::zero());
    Poly<K> D = Poly<K>::one();
    for (auto& f : factors) D = D * f;
    auto [q, r] = Poly<K>::divmod(N, D);
    out.poly_part = q;
    Poly<K> rem = r, remden = D;
    for (size_t i = 0; i < factors.size(); ++i) {
        const Poly<K>& F = factors[i];
        Poly<K> R = Poly<K>::divexact(remden, F);
        if (F.degree() == 0) {
            rem = rem / F.coeff(0);
        } else if (!rem.is_zero()) {
            if (R.degree() == 0) {
                out.numerators[i] = rem / R.coeff(0);
                rem = Poly<K>::zero();
            } else {
                // 1 = s*F + t*R  =>  rem/(F*R) = (rem*t mod F)/F + (rem*s mod R)/R
                auto [g, s, t] = Poly<K>::xgcd(F, R);
                if (g.degree() != 0) throw arithmetic_error("partial_fractions: factors not coprime");
                out.numerators[i] = (rem * t) % F;
                rem = (rem * s) % R;
            }
        }
        remden = R;
    }
    return out;
}

// Sum of residues over all roots of F of A/F (deg A < deg F): the residue sum
// is the coefficient asymmetry at infinity.
template <class K>
K residue_sum_from_part(const Poly<K>& A, const Poly<K>& F) {
    if (A.degree() == F.degree() - 1) return A.lc() / F.lc();
    return K();
}

// ---------------------------------------------------------------------------
// Independent routes.

// Residue at a single finite point alpha of N/D (any pole order).
template <class K>
K residue_at_point(const Poly<K>& N, const Poly<K>& D, const K& alpha) {
    Poly<K> n = N.taylor_shift(alpha), d = D.taylor_shift(alpha);
    // expansion of n/d around t = 0 up to the t^{-1} coefficient
    int vn = 0, vd = 0;
    if (n.is_zero()) return K();
    while (n.coeff(vn) == K()) ++vn;
    while (d.coeff(vd) == K()) ++vd;
    int val = vn - vd;
    if (val >= 0) return K();
    int terms = -val; // need coefficients up to index terms-1 of the unit quotient
    LaurentSeries<K> ns = LaurentSeries<K>::zero(terms), ds = LaurentSeries<K>::zero(terms);
    for (int i = 0; i < terms; ++i) {
        ns.set(i, n.coeff(vn + i));
        ds.set(i, d.coeff(vd + i));
    }
    LaurentSeries<K> q = ns * ds.inverse();
    return q.coeff(terms - 1);
}

// Residue of (N/D) dr at r = infinity.
template <class K>
K residue_at_infinity(const Poly<K>& N, const Poly<K>& D) {
    if (N.is_zero()) return K();
    int d = std::max(N.degree(), D.degree());
    Poly<K> n = N.reversed(d), dd = D.reversed(d);
    // f(1/w); Res_inf f dr = -[w^1] f(1/w)
    int vn = 0, vd = 0;
    while (n.coeff(vn) == K()) ++vn;
    while (dd.coeff(vd) == K()) ++vd;
    int val = vn - vd;
    if (val > 1) return K();
    int terms = 2 - val;
    LaurentSeries<K> ns = LaurentSeries<K>::zero(terms), ds = LaurentSeries<K>::zero(terms);
    for (int i = 0; i < terms; ++i) {
        ns.set(i, n.coeff(vn + i));
        ds.set(i, dd.coeff(vd + i));
    }
    LaurentSeries<K> q = (ns * ds.inverse()).shifted(val);
    return K() - q.coeff(1);
}

// Quotient-ring trace route: sum of residues of N/D over the roots of E,
// where E is squarefree, E | D, gcd(E, D/E) = 1 (simple poles on the cluster).
template <class K>
K residue_sum_trace_route(const Poly<K>& N, const Poly<K>& D, const Poly<K>& E) {
    Poly<K> B = Poly<K>::divexact(D, E);
    Poly<K> BE = (B * E.derivative()) % E;
    auto [g, s, t] = Poly<K>::xgcd(BE, E);
    (void)t;
    if (g.degree() != 0) throw arithmetic_error("trace route: non-simple pole on cluster");
    Poly<K> inv = s / g.coeff(0);
    return quotient_trace((N % E) * inv, E);
}

// ---------------------------------------------------------------------------
// Cluster residue engine.

template <class K>
struct ClusterResidues {
    std::vector<K> sums;  // aligned with requested clusters
    K leftover{};         // residues at poles not covered by any cluster
    K at_infinity{};
};

// Split the poles of N/D into the requested clusters (squarefree, pairwise
// coprime polynomials in the integration variable) and compute exact residue
// sums per cluster. With verify=true every cluster sum is recomputed through
// an independent route and compared.
template <class K>
ClusterResidues<K> residues_by_cluster(const Poly<K>& N0, const Poly<K>& D0,
                                       const std::vector<Poly<K>>& clusters, bool verify) {
    ClusterResidues<K> zero_out;
    zero_out.sums.resize(clusters.size());
    if (N0.is_zero()) return zero_out;
    Poly<K> N = N0, D = D0;
    Poly<K> g = Poly<K>::gcd(N, D);
    if (g.degree() > 0) {
        N = Poly<K>::divexact(N, g);
        D = Poly<K>::divexact(D, g);
    }
    K dlc = D.lc();
    N = N / dlc;
    D = D / dlc;

    std::vector<Poly<K>> factors;
    factors.reserve(clusters.size() + 1);
    Poly<K> rest = D;
    for (auto& C : clusters) {
        auto [E, R] = extract_cluster_factor(rest, C);
        factors.push_back(E);
        rest = R;
    }
    factors.push_back(rest);

    PartialFractions<K> pf = partial_fractions(N, factors);

    ClusterResidues<K> out;
    out.sums.resize(clusters.size());
    K total = K();
    for (size_t i = 0; i < clusters.size(); ++i) {
        out.sums[i] = residue_sum_from_part(pf.numerators[i], factors[i]);
        total = total + out.sums[i];
    }
    out.leftover = residue_sum_from_part(pf.numerators.back(), factors.back());
    total = total + out.leftover;
    out.at_infinity = K() - total; // sphere total is zero by partial fractions

    if (verify) {
        // independent check of the infinity residue by direct expansion
        K inf2 = residue_at_infinity(N, D);
        ResidueStats::route_checks.fetch_add(1, std::memory_order_relaxed);
        if (!(inf2 == out.at_infinity))
            ResidueStats::route_mismatches.fetch_add(1, std::memory_order_relaxed);
        for (size_t i = 0; i < clusters.size(); ++i) {
            const Poly<K>& E = factors[i];
            if (E.degree() == 0) continue;
            K other;
            bool have = false;
            if (Poly<K>::gcd(E, E.derivative()).degree() == 0 &&
                Poly<K>::gcd(E, Poly<K>::divexact(D, E)).degree() == 0) {
                other = residue_sum_trace_route(N, D, E);
                have = true;
            } else if (E.degree() == 1) {
                K alpha = (K() - E.coeff(0)) / E.coeff(1);
                other = residue_at_point(N, D, alpha);
                have = true;
            }
            if (have) {
                ResidueStats::route_checks.fetch_add(1, std::memory_order_relaxed);
                if (!(other == out.sums[i]))
                    ResidueStats::route_mismatches.fetch_add(1, std::memory_order_relaxed);
            }
        }
    }
    return out;
}

} // namespace specrec

#endif
