#include "newton/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace newton {

namespace {

Exp checked_add(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r)) throw precondition_error("exponent overflow");
    return r;
}

Exp checked_mul(Exp a, Exp b) {
    Exp r;
    if (__builtin_mul_overflow(a, b, &r)) throw precondition_error("exponent overflow");
    return r;
}

void check_ring(Ring ring, const LaurentPoly::TermMap& terms) {
    for (const auto& [e, c] : terms) {
        (void)c;
        bool ok = true;
        switch (ring) {
            case Ring::poly: ok = e.first >= 0 && e.second >= 0; break;
            case Ring::x_laurent: ok = e.second >= 0; break;
            case Ring::y_laurent: ok = e.first >= 0; break;
        }
        if (!ok) throw precondition_error("exponent outside the declared ambient ring");
    }
}

Ring join(Ring a, Ring b) {
    if (a == b) return a;
    if (a == Ring::poly) return b;
    if (b == Ring::poly) return a;
    throw precondition_error("mixing k[x^-1,x,y] and k[x,y,y^-1] operands");
}

}  // namespace

LaurentPoly::LaurentPoly(TowerPtr tower, std::string xvar, std::string yvar, Ring ring,
                         TermMap terms)
    : tower_(std::move(tower)), x_(std::move(xvar)), y_(std::move(yvar)), ring_(ring),
      terms_(std::move(terms)) {
    normalize();
    check_ring(ring_, terms_);
}

void LaurentPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::monomial(const TowerPtr& tower, const std::string& xvar,
                                  const std::string& yvar, Ring ring, Exp a, Exp b,
                                  const AlgebraicScalar& c) {
    TermMap t;
    if (!c.is_zero()) t[{a, b}] = c;
    return LaurentPoly(tower, xvar, yvar, ring, std::move(t));
}

LaurentPoly LaurentPoly::constant(const TowerPtr& tower, const std::string& xvar,
                                  const std::string& yvar, Ring ring, const AlgebraicScalar& c) {
    return monomial(tower, xvar, yvar, ring, 0, 0, c);
}

std::vector<LatticePoint> LaurentPoly::support() const {
    std::vector<LatticePoint> pts;
    pts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        (void)c;
        pts.push_back(e);
    }
    return pts;
}

AlgebraicScalar LaurentPoly::coeff(Exp a, Exp b) const {
    auto it = terms_.find({a, b});
    if (it == terms_.end()) return AlgebraicScalar();
    return it->second;
}

Exp LaurentPoly::min_x_exp() const {
    if (terms_.empty()) throw precondition_error("empty support");
    Exp m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) {
        (void)c;
        m = std::min(m, e.first);
    }
    return m;
}

Exp LaurentPoly::max_x_exp() const {
    if (terms_.empty()) throw precondition_error("empty support");
    Exp m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) {
        (void)c;
        m = std::max(m, e.first);
    }
    return m;
}

Exp LaurentPoly::min_y_exp() const {
    if (terms_.empty()) throw precondition_error("empty support");
    Exp m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) {
        (void)c;
        m = std::min(m, e.second);
    }
    return m;
}

Exp LaurentPoly::max_y_exp() const {
    if (terms_.empty()) throw precondition_error("empty support");
    Exp m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) {
        (void)c;
        m = std::max(m, e.second);
    }
    return m;
}

bool LaurentPoly::depends_on_x() const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e.first != 0) return true;
    }
    return false;
}

bool LaurentPoly::depends_on_y() const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e.second != 0) return true;
    }
    return false;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        (void)e;
        c = -c;
    }
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(common_tower(a.tower_, b.tower_), a.x_, a.y_, join(a.ring_, b.ring_));
    r.terms_ = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end())
            r.terms_[e] = c;
        else
            it->second += c;
    }
    r.normalize();
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(common_tower(a.tower_, b.tower_), a.x_, a.y_, join(a.ring_, b.ring_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            LatticePoint e{checked_add(ea.first, eb.first), checked_add(ea.second, eb.second)};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = ca * cb;
            else
                it->second += ca * cb;
        }
    r.normalize();
    check_ring(r.ring_, r.terms_);
    return r;
}

LaurentPoly LaurentPoly::operator*(const AlgebraicScalar& s) const {
    LaurentPoly r = *this;
    r.tower_ = common_tower(tower_, s.tower());
    for (auto& [e, c] : r.terms_) {
        (void)e;
        c *= s;
    }
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::operator-(const AlgebraicScalar& s) const {
    return *this - LaurentPoly::constant(common_tower(tower_, s.tower()), x_, y_, ring_, s);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::times_monomial(Exp a, Exp b, const AlgebraicScalar& c) const {
    LaurentPoly r(common_tower(tower_, c.tower()), x_, y_, ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_)
        r.terms_[{checked_add(e.first, a), checked_add(e.second, b)}] = k * c;
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw precondition_error("negative power of a Laurent polynomial");
    LaurentPoly acc = LaurentPoly::constant(tower_, x_, y_, ring_, AlgebraicScalar(Rat(1)));
    LaurentPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::partial_x() const {
    LaurentPoly r(tower_, x_, y_, Ring::x_laurent);
    for (const auto& [e, c] : terms_) {
        if (e.first == 0) continue;
        r.terms_[{e.first - 1, e.second}] = c * AlgebraicScalar(Rat(e.first));
    }
    r.normalize();
    if (min_x_exp() >= 0 && !r.terms_.empty() && r.min_x_exp() >= 0) r.ring_ = ring_;
    return r;
}

LaurentPoly LaurentPoly::partial_y() const {
    LaurentPoly r(tower_, x_, y_, ring_);
    for (const auto& [e, c] : terms_) {
        if (e.second == 0) continue;
        r.terms_[{e.first, e.second - 1}] = c * AlgebraicScalar(Rat(e.second));
    }
    r.normalize();
    return r;
}

AlgebraicScalar LaurentPoly::eval(const AlgebraicScalar& x0, const AlgebraicScalar& y0) const {
    AlgebraicScalar acc;
    for (const auto& [e, c] : terms_) acc += c * x0.pow(e.first) * y0.pow(e.second);
    return acc;
}

UniPoly LaurentPoly::eval_x(const AlgebraicScalar& x0) const {
    TowerPtr tw = common_tower(tower_, x0.tower());
    std::vector<AlgebraicScalar> c;
    for (const auto& [e, k] : terms_) {
        if (e.second < 0) throw precondition_error("eval_x needs y-exponents >= 0");
        if (static_cast<size_t>(e.second) >= c.size()) c.resize(e.second + 1);
        c[e.second] += k * x0.pow(e.first);
    }
    return UniPoly(tw, y_, std::move(c));
}

UniPoly LaurentPoly::eval_y(const AlgebraicScalar& y0) const {
    TowerPtr tw = common_tower(tower_, y0.tower());
    std::vector<AlgebraicScalar> c;
    for (const auto& [e, k] : terms_) {
        if (e.first < 0) throw precondition_error("eval_y needs x-exponents >= 0");
        if (static_cast<size_t>(e.first) >= c.size()) c.resize(e.first + 1);
        c[e.first] += k * y0.pow(e.second);
    }
    return UniPoly(tw, x_, std::move(c));
}

LaurentPoly LaurentPoly::lifted(const TowerPtr& tower) const {
    LaurentPoly r = *this;
    r.tower_ = tower ? tower : FieldTower::rationals();
    for (auto& [e, c] : r.terms_) {
        (void)e;
        c = c.lifted(r.tower_);
    }
    return r;
}

LaurentPoly LaurentPoly::renamed(const std::string& xvar, const std::string& yvar) const {
    LaurentPoly r = *this;
    r.x_ = xvar;
    r.y_ = yvar;
    return r;
}

LaurentPoly LaurentPoly::with_ring(Ring ring) const {
    LaurentPoly r = *this;
    check_ring(ring, r.terms_);
    r.ring_ = ring;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        AlgebraicScalar coeff = c;
        if (c.is_rational() && c.rational() < 0) {
            os << (first ? "-" : " - ");
            coeff = -c;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        std::string coef = coeff.to_string();
        bool unit = coef == "1" && !(e.first == 0 && e.second == 0);
        if (!unit) {
            if (coef.find_first_of("+*^ ") != std::string::npos)
                os << "(" << coef << ")";
            else
                os << coef;
            if (e.first != 0 || e.second != 0) os << "*";
        }
        if (e.first != 0) {
            os << x_;
            if (e.first != 1) os << "^" << e.first;
            if (e.second != 0) os << "*";
        }
        if (e.second != 0) {
            os << y_;
            if (e.second != 1) os << "^" << e.second;
        }
    }
    return os.str();
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = AlgebraicScalar::compare(ia->second, ib->second);
        if (c) return c;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Substitution engine

LaurentPoly substitute(const LaurentPoly& f, const VarImage& xi, const VarImage& yi,
                       const std::string& vvar, const std::string& wvar, Ring ring) {
    TowerPtr tw = common_tower(common_tower(f.tower(), xi.coef.tower()), yi.coef.tower());
    tw = common_tower(tw, xi.shift.tower());
    tw = common_tower(tw, yi.shift.tower());
    LaurentPoly::TermMap out;
    // Precompute binomial rows lazily per exponent.
    auto add_term = [&](Exp a, Exp b, const AlgebraicScalar& c) {
        auto it = out.find({a, b});
        if (it == out.end())
            out[{a, b}] = c;
        else
            it->second += c;
    };
    for (const auto& [e, c] : f.terms()) {
        Exp a = e.first, b = e.second;
        if ((xi.has_w && a < 0) || (yi.has_w && b < 0))
            throw precondition_error("negative exponent powers a shifted factor");
        AlgebraicScalar base = c * xi.coef.pow(a) * yi.coef.pow(b);
        Exp v0 = checked_add(checked_mul(xi.v_exp, a), checked_mul(yi.v_exp, b));
        // expand (w + sx)^(a if has_w) * (w + sy)^(b if has_w)
        std::vector<AlgebraicScalar> polyw{AlgebraicScalar(Rat(1))};
        auto mul_shift_pow = [&](const AlgebraicScalar& shift, Exp n) {
            for (Exp k = 0; k < n; ++k) {
                std::vector<AlgebraicScalar> next(polyw.size() + 1);
                for (size_t i = 0; i < polyw.size(); ++i) {
                    next[i + 1] += polyw[i];
                    next[i] += polyw[i] * shift;
                }
                polyw = std::move(next);
            }
        };
        if (xi.has_w) mul_shift_pow(xi.shift, a);
        if (yi.has_w) mul_shift_pow(yi.shift, b);
        for (size_t i = 0; i < polyw.size(); ++i) {
            if (polyw[i].is_zero()) continue;
            add_term(v0, static_cast<Exp>(i), base * polyw[i]);
        }
    }
    return LaurentPoly(tw, vvar, wvar, ring, std::move(out));
}

namespace {

// Unique Bezout pair p p' - q q' = 1 with 0 <= p' <= q, 0 <= q' < p (both >= 1).
std::pair<Exp, Exp> canonical_bezout_local(Exp p, Exp q) {
    if (q == 1) return {1, p - 1};
    // p' = p^{-1} mod q in [1, q-1]
    Exp t0 = 0, t1 = 1, r0 = q, r1 = p % q;
    while (r1 != 0) {
        Exp quo = r0 / r1;
        Exp t2 = t0 - quo * t1;
        t0 = t1;
        t1 = t2;
        Exp r2 = r0 - quo * r1;
        r0 = r1;
        r1 = r2;
    }
    Exp pp = ((t0 % q) + q) % q;
    if (pp == 0) pp = q;
    Exp qq = (p * pp - 1) / q;
    return {pp, qq};
}

Exp gcd_exp(Exp a, Exp b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        Exp t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Smallest nonnegative solution e of (k * e) ≡ 1 (mod n), n >= 1, gcd(k,n)=1.
Exp inv_mod(Exp k, Exp n) {
    if (n == 1) return 0;
    k %= n;
    if (k < 0) k += n;
    Exp t0 = 0, t1 = 1, r0 = n, r1 = k;
    while (r1 != 0) {
        Exp quo = r0 / r1;
        Exp t2 = t0 - quo * t1;
        t0 = t1;
        t1 = t2;
        Exp r2 = r0 - quo * r1;
        r0 = r1;
        r1 = r2;
    }
    return ((t0 % n) + n) % n;
}

}  // namespace

LaurentPoly newton_map_local(const LaurentPoly& f, Exp p, Exp q, const AlgebraicScalar& mu,
                             const std::string& vvar, const std::string& wvar) {
    if (p < 1 || q < 1 || gcd_exp(p, q) != 1)
        throw precondition_error("newton_map_local needs coprime p,q >= 1");
    if (!f.is_zero() && f.min_y_exp() < 0)
        throw precondition_error("newton_map_local input must lie in k[x^-1,x,y]");
    auto [pp, qq] = canonical_bezout_local(p, q);
    VarImage xi{mu.pow(qq), p, false, AlgebraicScalar()};
    VarImage yi{AlgebraicScalar(Rat(1)), q, true, mu.pow(pp)};
    return substitute(f, xi, yi, vvar, wvar, Ring::x_laurent);
}

LaurentPoly newton_map_infinity(const LaurentPoly& f, Exp p, Exp q, const AlgebraicScalar& mu,
                                const std::string& vvar, const std::string& wvar) {
    if ((p == 0 && q == 0) || gcd_exp(p, q) != 1)
        throw precondition_error("newton_map_infinity needs a primitive direction");
    if (p <= 0 && q <= 0)
        throw precondition_error("newton_map_infinity direction must avoid the negative quadrant");
    if (!f.is_zero() && (f.min_x_exp() < 0 || f.min_y_exp() < 0))
        throw precondition_error("newton_map_infinity input must lie in k[x,y]");
    if (p == 0 && q == 1) {
        // f(w+mu, 1/v): swap the exponent roles so the shifted factor pairs with w
        LaurentPoly::TermMap t;
        for (const auto& [e, c] : f.terms()) t[{e.second, e.first}] = c;
        LaurentPoly swapped(f.tower(), f.yvar(), f.xvar(), Ring::poly, std::move(t));
        VarImage xi2{AlgebraicScalar(Rat(1)), -1, false, AlgebraicScalar()};
        VarImage yi2{AlgebraicScalar(Rat(1)), 0, true, mu};
        return substitute(swapped, xi2, yi2, vvar, wvar, Ring::x_laurent);
    }
    if (p == 1 && q == 0) {
        VarImage xi{AlgebraicScalar(Rat(1)), -1, false, AlgebraicScalar()};
        VarImage yi{AlgebraicScalar(Rat(1)), 0, true, mu};
        return substitute(f, xi, yi, vvar, wvar, Ring::x_laurent);
    }
    if (p > 0 && q > 0) {
        // q q' - p p' = 1, canonical 0 <= p' < q
        Exp pp = ((-inv_mod(p, q)) % q + q) % q;
        Exp qq = (1 + p * pp) / q;
        VarImage xi{mu.pow(qq), -p, false, AlgebraicScalar()};
        VarImage yi{AlgebraicScalar(Rat(1)), -q, true, mu.pow(pp)};
        return substitute(f, xi, yi, vvar, wvar, Ring::x_laurent);
    }
    if (p > 0 && q < 0) {
        // p p' - q q' = 1, canonical 0 <= q' < p
        Exp qq = inv_mod(-q, p);
        Exp pp = (1 + q * qq) / p;
        VarImage xi{mu.pow(qq), -p, false, AlgebraicScalar()};
        VarImage yi{AlgebraicScalar(Rat(1)), -q, true, mu.pow(pp)};
        return substitute(f, xi, yi, vvar, wvar, Ring::x_laurent);
    }
    // p < 0, q > 0: p p' - q q' = 1, canonical 0 <= q' < |p|
    Exp qq = ((-inv_mod(q, -p)) % (-p) + (-p)) % (-p);
    Exp pp = (1 + q * qq) / p;
    VarImage xi{AlgebraicScalar(Rat(1)), -p, true, mu.pow(qq)};
    VarImage yi{mu.pow(pp), -q, false, AlgebraicScalar()};
    return substitute(f, xi, yi, vvar, wvar, Ring::x_laurent);
}

LaurentPoly substitute_axis_flip(const LaurentPoly& f, const AlgebraicScalar& mu, AxisFlip which,
                                 const std::string& vvar, const std::string& wvar) {
    if (which == AxisFlip::horizontal) return newton_map_infinity(f, 0, 1, mu, vvar, wvar);
    return newton_map_infinity(f, 1, 0, mu, vvar, wvar);
}

Exp height(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("height of the zero polynomial");
    Exp amin = f.min_x_exp();
    bool seen = false;
    Exp b0 = 0;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        if (e.first != amin) continue;
        if (!seen || e.second < b0) b0 = e.second;
        seen = true;
    }
    return b0 - f.min_y_exp();
}

std::pair<std::string, std::string> next_var_names(const LaurentPoly& f) {
    const std::string& x = f.xvar();
    if (x == "x") return {"v", "w"};
    size_t i = 1;
    while (i < x.size() && !isdigit(static_cast<unsigned char>(x[i]))) ++i;
    std::string stem_x = x.substr(0, i);
    std::string stem_y = f.yvar();
    size_t j = 1;
    while (j < stem_y.size() && !isdigit(static_cast<unsigned char>(stem_y[j]))) ++j;
    stem_y = stem_y.substr(0, j);
    long n = (i < x.size()) ? std::stol(x.substr(i)) : 0;
    return {stem_x + std::to_string(n + 1), stem_y + std::to_string(n + 1)};
}

}  // namespace newton
