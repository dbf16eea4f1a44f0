#include "specrec/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace specrec {

namespace {

struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return b < a; }
};

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<uint16_t>(a[i] + b[i]);
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    // does a divide b
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<uint16_t>(b[i] - a[i]);
    return r;
}

} // namespace

MultiPoly MultiPoly::constant(Rational q) {
    MultiPoly p;
    if (q != 0) p.t.push_back({Mono{}, std::move(q)});
    return p;
}

MultiPoly MultiPoly::var(int v, int pow) {
    if (pow == 0) return one();
    MultiPoly p;
    Mono m{};
    m[v] = static_cast<uint16_t>(pow);
    p.t.push_back({m, Rational(1)});
    return p;
}

Rational MultiPoly::constant_value() const {
    if (t.empty()) return Rational(0);
    return t[0].second;
}

int MultiPoly::degree(int v) const {
    int d = 0;
    for (auto& [m, c] : t) d = std::max<int>(d, m[v]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : t) {
        int s = 0;
        for (int i = 0; i < kMaxVars; ++i) s += m[i];
        d = std::max(d, s);
    }
    return d;
}

uint32_t MultiPoly::var_mask() const {
    uint32_t mask = 0;
    for (auto& [m, c] : t)
        for (int i = 0; i < kMaxVars; ++i)
            if (m[i]) mask |= 1u << i;
    return mask;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.t) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::vector<std::pair<Mono, Rational>> merged;
    merged.reserve(t.size() + o.t.size());
    size_t i = 0, j = 0;
    while (i < t.size() && j < o.t.size()) {
        if (o.t[j].first < t[i].first) {
            merged.push_back(t[i++]);
        } else if (t[i].first < o.t[j].first) {
            merged.push_back(o.t[j++]);
        } else {
            Rational c = t[i].second + o.t[j].second;
            if (c != 0) merged.push_back({t[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    while (i < t.size()) merged.push_back(t[i++]);
    while (j < o.t.size()) merged.push_back(o.t[j++]);
    t = std::move(merged);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    std::map<Mono, Rational, MonoGreater> acc;
    for (auto& [ma, ca] : a.t)
        for (auto& [mb, cb] : b.t) {
            Mono m = mono_mul(ma, mb);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) acc.erase(it);
            }
        }
    MultiPoly r;
    r.t.assign(acc.begin(), acc.end());
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& q) const {
    if (q == 0) return MultiPoly();
    MultiPoly r(*this);
    for (auto& [m, c] : r.t) c *= q;
    return r;
}

MultiPoly MultiPoly::derivative(int v) const {
    MultiPoly r;
    r.t.reserve(t.size());
    for (auto& [m, c] : t) {
        if (m[v] == 0) continue;
        Mono m2 = m;
        m2[v] -= 1;
        r.t.push_back({m2, c * Rational(m[v])});
    }
    std::sort(r.t.begin(), r.t.end(),
              [](const auto& x, const auto& y) { return y.first < x.first; });
    return r;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (auto& [m, c] : t) g = rat_gcd(g, c);
    if (!t.empty() && t[0].second < 0) g = -g;
    return g;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    Rational c = content();
    MultiPoly r(*this);
    for (auto& [m, q] : r.t) q /= c;
    return r;
}

bool MultiPoly::try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& q) {
    if (b.is_zero()) throw arithmetic_error("MultiPoly: division by zero");
    q = MultiPoly();
    if (a.is_zero()) return true;
    if (b.is_constant()) {
        q = a * (Rational(1) / b.constant_value());
        return true;
    }
    MultiPoly r = a;
    std::vector<std::pair<Mono, Rational>> qt;
    const Mono& lmb = b.t[0].first;
    const Rational& lcb = b.t[0].second;
    while (!r.is_zero()) {
        const Mono& lmr = r.t[0].first;
        if (!mono_divides(lmb, lmr)) return false;
        Mono m = mono_div(lmr, lmb);
        Rational c = r.t[0].second / lcb;
        qt.push_back({m, c});
        MultiPoly piece;
        piece.t.push_back({m, c});
        r -= piece * b;
    }
    std::sort(qt.begin(), qt.end(), [](const auto& x, const auto& y) { return y.first < x.first; });
    q.t = std::move(qt);
    return true;
}

MultiPoly MultiPoly::divexact(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_divexact(a, b, q)) throw arithmetic_error("MultiPoly::divexact: not divisible");
    return q;
}

Poly<MultiPoly> MultiPoly::to_univar(int v) const {
    Poly<MultiPoly> p;
    p.c.assign(degree(v) + 1, MultiPoly());
    for (auto& [m, c] : t) {
        Mono m2 = m;
        int e = m2[v];
        m2[v] = 0;
        MultiPoly piece;
        piece.t.push_back({m2, c});
        p.c[e] += piece;
    }
    p.trim();
    return p;
}

MultiPoly MultiPoly::from_univar(const Poly<MultiPoly>& p, int v) {
    MultiPoly r;
    for (int e = 0; e <= p.degree(); ++e) {
        if (p.c[e].is_zero()) continue;
        r += p.c[e] * var(v, e);
    }
    return r;
}

MultiPoly MultiPoly::eval_var(int v, const Rational& x) const {
    Poly<MultiPoly> p = to_univar(v);
    MultiPoly r;
    for (int e = p.degree(); e >= 0; --e) r = r * constant(x) + p.coeff(e);
    return r;
}

MultiPoly MultiPoly::pow(MultiPoly base, long e) {
    MultiPoly r = one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// gcd machinery

namespace {

// primitive PRS gcd over Z
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer zcontent(const ZPoly& a) {
    Integer g = 0;
    for (auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

void zprimitive(ZPoly& a) {
    Integer g = zcontent(a);
    if (g == 0) return;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
}

// pseudo-remainder of a by b (b nonzero, deg a >= deg b)
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        ztrim(a);
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) {
        zprimitive(b);
        return b;
    }
    if (b.empty()) {
        zprimitive(a);
        return a;
    }
    if (a.size() < b.size()) std::swap(a, b);
    zprimitive(a);
    zprimitive(b);
    while (true) {
        if (b.size() == 1) return {Integer(1)};
        ZPoly r = zprem(a, b);
        if (r.empty()) return b;
        zprimitive(r);
        a = std::move(b);
        b = std::move(r);
        if (a.size() < b.size()) std::swap(a, b);
    }
}

// univariate MultiPoly (single active variable) -> integer-primitive gcd
MultiPoly univar_gcd(const MultiPoly& a, const MultiPoly& b, int v) {
    auto to_z = [&](const MultiPoly& p, ZPoly& out) {
        Poly<MultiPoly> u = p.to_univar(v);
        Integer l = 1;
        for (int i = 0; i <= u.degree(); ++i)
            if (!u.c[i].is_zero()) l = boost::multiprecision::lcm(l, den(u.c[i].constant_value()));
        out.assign(u.degree() + 1, Integer(0));
        for (int i = 0; i <= u.degree(); ++i)
            if (!u.c[i].is_zero()) {
                Rational q = u.c[i].constant_value() * Rational(l);
                out[i] = num(q);
            }
    };
    ZPoly za, zb;
    to_z(a, za);
    to_z(b, zb);
    ZPoly g = zgcd(std::move(za), std::move(zb));
    MultiPoly r;
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) r += MultiPoly::var(v, static_cast<int>(i)) * MultiPoly::constant(Rational(g[i]));
    return r;
}

int pick_main_var(const MultiPoly& a, const MultiPoly& b, uint32_t mask) {
    int best = -1, bestdeg = 1 << 30;
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(mask & (1u << v))) continue;
        int d = std::max(a.degree(v), b.degree(v));
        if (d > 0 && d < bestdeg) {
            bestdeg = d;
            best = v;
        }
    }
    return best;
}

MultiPoly coeff_content(const Poly<MultiPoly>& p) {
    MultiPoly g;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.c[i].is_zero()) continue;
        g = g.is_zero() ? p.c[i] : MultiPoly::gcd(g, p.c[i]);
        if (g.is_constant()) return MultiPoly::one();
    }
    return g.is_zero() ? MultiPoly::one() : g;
}

Poly<MultiPoly> divide_coeffs(const Poly<MultiPoly>& p, const MultiPoly& d) {
    Poly<MultiPoly> q;
    q.c.resize(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i)
        q.c[i] = p.c[i].is_zero() ? MultiPoly() : MultiPoly::divexact(p.c[i], d);
    q.trim();
    return q;
}

Poly<MultiPoly> mp_prem(Poly<MultiPoly> a, const Poly<MultiPoly>& b) {
    int db = b.degree();
    const MultiPoly& lb = b.lc();
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        MultiPoly la = a.lc();
        for (auto& c : a.c) c *= lb;
        for (int i = 0; i <= db; ++i) a.c[da - db + i] -= la * b.c[i];
        a.trim();
    }
    return a;
}

// did evaluation keep the leading coefficient alive?
bool eval_probe_gcd_is_trivial(const MultiPoly& a, const MultiPoly& b, int v, uint32_t mask) {
    for (long base = 2; base < 7; ++base) {
        MultiPoly ea = a, eb = b;
        long off = 0;
        for (int w = 0; w < kMaxVars; ++w) {
            if (w == v || !(mask & (1u << w))) continue;
            ea = ea.eval_var(w, Rational(base + off));
            eb = eb.eval_var(w, Rational(base + off));
            ++off;
        }
        if (ea.degree(v) != a.degree(v) || eb.degree(v) != b.degree(v)) continue;
        MultiPoly g = univar_gcd(ea, eb, v);
        if (!g.depends_on(v)) return true;
        return false;
    }
    return false;
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? MultiPoly() : b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return one();
    uint32_t mask = a.var_mask() | b.var_mask();
    uint32_t common = a.var_mask() & b.var_mask();
    if (common == 0) return one(); // disjoint variable sets: only constant divisors
    int nactive = __builtin_popcount(mask);
    int v = pick_main_var(a, b, common ? common : mask);
    if (v < 0) return one();
    if (nactive == 1) return univar_gcd(a, b, v);

    if (eval_probe_gcd_is_trivial(a, b, v, mask)) {
        // gcd free of v: recurse on contents w.r.t. v
        MultiPoly ca = coeff_content(a.to_univar(v));
        MultiPoly cb = coeff_content(b.to_univar(v));
        if (ca.is_constant() || cb.is_constant()) return one();
        return gcd(ca, cb);
    }

    Poly<MultiPoly> pa = a.to_univar(v), pb = b.to_univar(v);
    MultiPoly ca = coeff_content(pa), cb = coeff_content(pb);
    pa = divide_coeffs(pa, ca);
    pb = divide_coeffs(pb, cb);
    MultiPoly cont = gcd(ca, cb);
    if (pa.degree() < pb.degree()) std::swap(pa, pb);

    while (true) {
        if (pb.degree() == 0) {
            return cont.primitive();
        }
        Poly<MultiPoly> r = mp_prem(pa, pb);
        if (r.is_zero()) {
            MultiPoly g = from_univar(divide_coeffs(pb, coeff_content(pb)), v);
            return (cont * g).primitive();
        }
        pa = std::move(pb);
        pb = divide_coeffs(r, coeff_content(r));
        if (pa.degree() < pb.degree()) std::swap(pa, pb);
    }
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t) {
        Rational q = c;
        if (!first) {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        } else {
            if (q < 0) {
                os << "-";
                q = -q;
            }
            first = false;
        }
        bool any = false;
        std::ostringstream vars;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!m[i]) continue;
            if (any) vars << "*";
            vars << (i < (int)names.size() ? names[i] : "v" + std::to_string(i));
            if (m[i] > 1) vars << "^" << m[i];
            any = true;
        }
        if (!any) {
            os << to_string(q);
        } else {
            if (q != 1) os << to_string(q) << "*";
            os << vars.str();
        }
    }
    return os.str();
}

std::string MultiPoly::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < kMaxVars; ++i) names.push_back("z" + std::to_string(i + 1));
    return str(names);
}

} // namespace specrec
