// Factorization over Q: Cantor-Zassenhaus modulo a word-size prime, quadratic
// Hensel lifting past the Mignotte bound, then subset recombination.  Inputs are
// small (face polynomials, discriminants), so the simple variants suffice.

#include <algorithm>
#include <cstdint>
#include <random>

#include "factor_detail.hpp"

namespace newton::detail {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ----------------------------------------------------------------- F_p layer

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

using PolyP = std::vector<u64>;  // dense, little-endian

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP mul(const Fp& F, const PolyP& a, const PolyP& b) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

PolyP sub(const Fp& F, PolyP a, const PolyP& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    trim(a);
    return a;
}

std::pair<PolyP, PolyP> divmod(const Fp& F, PolyP a, const PolyP& b) {
    trim(a);
    PolyP q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    u64 binv = F.inv(b.back());
    while (deg(a) >= deg(b)) {
        u64 c = F.mul(a.back(), binv);
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return {q, a};
}

PolyP monic(const Fp& F, PolyP f) {
    if (f.empty()) return f;
    u64 c = F.inv(f.back());
    for (auto& x : f) x = F.mul(x, c);
    return f;
}

PolyP gcd(const Fp& F, PolyP a, PolyP b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

PolyP deriv(const Fp& F, const PolyP& f) {
    PolyP r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(F.mul(f[i], i % F.p));
    trim(r);
    return r;
}

PolyP powmod_u128(const Fp& F, PolyP a, u128 e, const PolyP& m) {
    PolyP r{1};
    a = divmod(F, std::move(a), m).second;
    while (e) {
        if (e & 1) r = divmod(F, mul(F, r, a), m).second;
        a = divmod(F, mul(F, a, a), m).second;
        e >>= 1;
    }
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus): f monic squarefree, all irreducible
// factors of degree d.
void factor_equal_degree(const Fp& F, const PolyP& f, int d, std::vector<PolyP>& out,
                         std::mt19937_64& rng) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    u128 pd = 1;
    for (int i = 0; i < d; ++i) pd *= F.p;
    u128 half = (pd - 1) / 2;
    while (true) {
        PolyP a(deg(f), 0);
        for (auto& x : a) x = rng() % F.p;
        trim(a);
        if (deg(a) < 1) continue;
        PolyP r = powmod_u128(F, a, half, f);
        if (r.empty()) continue;
        r[0] = F.sub(r[0], 1);
        trim(r);
        PolyP h = gcd(F, f, r);
        if (deg(h) > 0 && deg(h) < deg(f)) {
            PolyP q = divmod(F, f, h).first;
            factor_equal_degree(F, h, d, out, rng);
            factor_equal_degree(F, q, d, out, rng);
            return;
        }
    }
}

// Distinct-degree decomposition followed by equal-degree splitting; f squarefree.
std::vector<PolyP> factor_mod_p(const Fp& F, PolyP f, std::mt19937_64& rng) {
    std::vector<PolyP> out;
    f = monic(F, f);
    PolyP h{0, 1};  // x
    PolyP v = f;
    int d = 0;
    while (deg(v) > 0) {
        ++d;
        if (2 * d > deg(v)) {
            out.push_back(v);
            break;
        }
        h = powmod_u128(F, h, F.p, f);
        PolyP hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        trim(hx);
        PolyP g = gcd(F, v, hx);
        if (deg(g) > 0) {
            factor_equal_degree(F, g, d, out, rng);
            v = divmod(F, v, g).first;
        }
    }
    return out;
}

// ------------------------------------------------------------- Z[x] helpers

using PolyZ = std::vector<Int>;

void trimz(PolyZ& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degz(const PolyZ& f) { return static_cast<int>(f.size()) - 1; }

PolyZ mulz(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty()) return {};
    PolyZ r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trimz(r);
    return r;
}

PolyZ addz(PolyZ a, const PolyZ& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trimz(a);
    return a;
}

PolyZ subz(PolyZ a, const PolyZ& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trimz(a);
    return a;
}

void mod_plain(PolyZ& f, const Int& m) {
    for (auto& c : f) c = ((c % m) + m) % m;
    trimz(f);
}

void mod_sym(PolyZ& f, const Int& m) {
    Int half = m / 2;
    for (auto& c : f) {
        c = ((c % m) + m) % m;
        if (c > half) c -= m;
    }
    trimz(f);
}

PolyZ mul_mod(const PolyZ& a, const PolyZ& b, const Int& m) {
    PolyZ r = mulz(a, b);
    mod_plain(r, m);
    return r;
}

// divmod of a by b over Z/m with b monic.
std::pair<PolyZ, PolyZ> divmod_monic_mod(PolyZ a, const PolyZ& b, const Int& m) {
    mod_plain(a, m);
    PolyZ q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int c = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % m + m) % m;
        trimz(a);
    }
    trimz(q);
    return {q, a};
}

// exact division over Z, caller guarantees divisibility
PolyZ divz_exact(PolyZ a, const PolyZ& b) {
    PolyZ q;
    trimz(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trimz(a);
    }
    return q;
}

PolyZ primitive_part(PolyZ f) {
    trimz(f);
    if (f.empty()) return f;
    Int g = 0;
    for (const auto& c : f) g = gcd(g, c);
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

// True iff primitive g divides f exactly over Z.
bool divides_z(const PolyZ& g, const PolyZ& f) {
    PolyZ a = f;
    trimz(a);
    if (a.empty()) return true;
    if (a.size() < g.size()) return false;
    while (a.size() >= g.size()) {
        if (a.back() % g.back() != 0) return false;
        Int c = a.back() / g.back();
        size_t shift = a.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) a[shift + i] -= c * g[i];
        trimz(a);
        if (a.empty()) return true;
    }
    return false;
}

// Extended gcd mod p for coprime g, h: s*g + t*h ≡ 1 (mod p), deg s < deg h,
// deg t < deg g.
void ext_gcd_mod_p(const PolyZ& g, const PolyZ& h, const Int& p, PolyZ& s, PolyZ& t) {
    Fp F{mpz_class(p).get_ui()};
    PolyP gp, hp;
    for (const auto& c : g) gp.push_back(mpz_class(((c % p) + p) % p).get_ui());
    for (const auto& c : h) hp.push_back(mpz_class(((c % p) + p) % p).get_ui());
    trim(gp);
    trim(hp);
    PolyP r0 = gp, r1 = hp;
    PolyP s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(F, r0, r1);
        PolyP s2 = sub(F, s0, mul(F, q, s1));
        PolyP t2 = sub(F, t0, mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw consistency_error("modular factors not coprime in Hensel setup");
    u64 c = F.inv(r0[0]);
    for (auto& x : s0) x = F.mul(x, c);
    for (auto& x : t0) x = F.mul(x, c);
    s.clear();
    t.clear();
    for (u64 v : s0) s.emplace_back(v);
    for (u64 v : t0) t.emplace_back(v);
    trimz(s);
    trimz(t);
}

// Quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10): monic f with
// f ≡ g h (mod m) and s g + t h ≡ 1 (mod m) become the same data mod m^2.
void hensel_step(const PolyZ& f, PolyZ& g, PolyZ& h, PolyZ& s, PolyZ& t, const Int& m) {
    Int m2 = m * m;
    PolyZ e = subz(f, mulz(g, h));
    mod_plain(e, m2);
    auto [q, r] = divmod_monic_mod(mul_mod(s, e, m2), h, m2);
    PolyZ gstar = addz(addz(g, mul_mod(t, e, m2)), mul_mod(q, g, m2));
    mod_plain(gstar, m2);
    PolyZ hstar = addz(h, r);
    mod_plain(hstar, m2);
    PolyZ b = addz(mul_mod(s, gstar, m2), mul_mod(t, hstar, m2));
    b = subz(b, PolyZ{Int(1)});
    mod_plain(b, m2);
    auto [c, d] = divmod_monic_mod(mul_mod(s, b, m2), hstar, m2);
    PolyZ sstar = subz(s, d);
    mod_plain(sstar, m2);
    PolyZ tstar = subz(subz(t, mul_mod(t, b, m2)), mul_mod(c, gstar, m2));
    mod_plain(tstar, m2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

// Lifts f ≡ prod(factors) (mod p), f and the factors monic, to modulus >= bound
// via a factor tree.  On return the factors multiply to f modulo that power.
void hensel_tree(const PolyZ& f, std::vector<PolyZ>& factors, const Int& p, const Int& bound) {
    if (factors.size() == 1) {
        factors[0] = f;
        return;
    }
    size_t half = factors.size() / 2;
    PolyZ g{Int(1)}, h{Int(1)};
    for (size_t i = 0; i < half; ++i) g = mul_mod(g, factors[i], p);
    for (size_t i = half; i < factors.size(); ++i) h = mul_mod(h, factors[i], p);
    PolyZ s, t;
    ext_gcd_mod_p(g, h, p, s, t);
    Int m = p;
    while (m < bound) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    mod_plain(g, m);
    mod_plain(h, m);
    std::vector<PolyZ> left(factors.begin(), factors.begin() + half);
    std::vector<PolyZ> right(factors.begin() + half, factors.end());
    hensel_tree(g, left, p, bound);
    hensel_tree(h, right, p, bound);
    factors.clear();
    for (auto& x : left) factors.push_back(std::move(x));
    for (auto& x : right) factors.push_back(std::move(x));
}

// Factor a squarefree primitive f in Z[x] into irreducible integer polynomials.
std::vector<PolyZ> factor_squarefree_z(PolyZ f) {
    std::vector<PolyZ> out;
    trimz(f);
    if (degz(f) <= 0) return out;
    if (degz(f) == 1) {
        out.push_back(primitive_part(f));
        return out;
    }
    // Monicize: F(x) = lc^(deg-1) * f(x/lc) is monic over Z; F[i] = f[i]*lc^(deg-1-i).
    Int lc = f.back();
    int n = degz(f);
    PolyZ F(f.size());
    for (int i = 0; i <= n; ++i) {
        Int pw = 1;
        for (int k = 0; k < n - 1 - i; ++k) pw *= lc;
        F[i] = (i == n) ? Int(1) : f[i] * pw;
    }
    static const u64 primes[] = {1000003, 1000033, 1000037, 1000039, 1000081, 1000099,
                                 1000117, 1000121, 1000133, 1000151, 1000159, 1000171,
                                 1000183, 1000187, 1000193, 1000199, 1000211, 1000213};
    std::mt19937_64 rng(0xC0FFEEULL);
    for (u64 p : primes) {
        Fp Fld{p};
        Int ip(static_cast<unsigned long>(p));
        PolyP fp;
        for (const auto& c : F) fp.push_back(mpz_class(((c % ip) + ip) % ip).get_ui());
        trim(fp);
        if (deg(fp) != degz(F)) continue;
        if (deg(gcd(Fld, fp, deriv(Fld, fp))) != 0) continue;
        std::vector<PolyP> modular = factor_mod_p(Fld, fp, rng);
        if (modular.size() == 1) {
            out.push_back(primitive_part(std::move(f)));
            return out;
        }
        std::sort(modular.begin(), modular.end());
        // Coefficient bound for monic factors of F (Mignotte): 2^n * ||F||_2.
        Int norm2 = 0;
        for (const auto& c : F) norm2 += c * c;
        Int bound = sqrt(norm2) + 1;
        for (int i = 0; i < n; ++i) bound *= 2;
        bound = 2 * bound + 1;
        std::vector<PolyZ> lifted;
        lifted.reserve(modular.size());
        for (const auto& mf : modular) {
            PolyZ z;
            for (u64 c : mf) z.emplace_back(static_cast<unsigned long>(c));
            lifted.push_back(std::move(z));
        }
        hensel_tree(F, lifted, ip, bound);
        Int modulus = ip;
        while (modulus < bound) modulus = modulus * modulus;
        // Subset recombination against the shrinking cofactor.
        std::vector<PolyZ> remaining = std::move(lifted);
        PolyZ current = F;
        std::vector<PolyZ> monic_factors;
        size_t k = 1;
        while (2 * k <= remaining.size()) {
            bool found = false;
            std::vector<size_t> idx(k);
            for (size_t i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                PolyZ cand{Int(1)};
                for (size_t i : idx) cand = mul_mod(cand, remaining[i], modulus);
                mod_sym(cand, modulus);
                if (divides_z(cand, current)) {
                    monic_factors.push_back(cand);
                    std::vector<PolyZ> rest;
                    for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        rest.push_back(remaining[i]);
                    }
                    remaining = std::move(rest);
                    current = divz_exact(current, cand);
                    found = true;
                    break;
                }
                int pos = static_cast<int>(k) - 1;
                while (pos >= 0 && idx[pos] == remaining.size() - k + static_cast<size_t>(pos))
                    --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
            }
            if (!found) ++k;
        }
        if (degz(current) > 0) monic_factors.push_back(current);
        // Map factors of F back to factors of f: g(x) -> primitive(g(lc x)).
        for (const auto& g : monic_factors) {
            PolyZ back(g.size());
            Int pw = 1;
            for (size_t i = 0; i < g.size(); ++i) {
                back[i] = g[i] * pw;
                pw *= lc;
            }
            out.push_back(primitive_part(back));
        }
        return out;
    }
    throw consistency_error("no suitable prime found for factorization");
}

}  // namespace

std::vector<UniPoly> factor_squarefree_rational(const UniPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational())
            throw precondition_error("factor_squarefree_rational needs rational coefficients");
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Int(c.rational().get_den()));
    PolyZ f;
    for (const auto& c : p.coeffs()) f.push_back(Int(Rat(c.rational() * den).get_num()));
    std::vector<PolyZ> zf = factor_squarefree_z(std::move(f));
    std::vector<UniPoly> out;
    for (const auto& g : zf) {
        std::vector<AlgebraicScalar> coeffs;
        Rat lead(g.back());
        for (const auto& c : g) coeffs.emplace_back(Rat(c) / lead);
        out.emplace_back(p.tower(), p.var(), std::move(coeffs));
    }
    std::sort(out.begin(), out.end(),
              [](const UniPoly& a, const UniPoly& b) { return UniPoly::compare(a, b) < 0; });
    return out;
}

}  // namespace newton::detail
