#include "newton/motives.hpp"

#include <algorithm>
#include <sstream>

namespace newton {

// ---------------------------------------------------------------------------
// LPoly

LPoly& LPoly::operator+=(const LPoly& o) {
    for (const auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (c) c_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& [e, c] : r.c_) {
        (void)e;
        c = -c;
    }
    return r;
}

LPoly LPoly::operator*(long k) const {
    LPoly r;
    if (k == 0) return r;
    r = *this;
    for (auto& [e, c] : r.c_) {
        (void)e;
        c *= k;
    }
    return r;
}

long LPoly::euler() const {
    long s = 0;
    for (const auto& [e, c] : c_) {
        (void)e;
        s += c;
    }
    return s;
}

std::string LPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        long c = it->second;
        Exp e = it->first;
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        long ac = c < 0 ? -c : c;
        if (e == 0) {
            os << ac;
        } else {
            if (ac != 1) os << ac << "*";
            os << "L";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// MotiveAtom

MotiveAtom MotiveAtom::unit_atom() { return MotiveAtom{}; }

MotiveAtom MotiveAtom::power(Exp N) {
    if (N == 0) throw precondition_error("power class with zero exponent");
    MotiveAtom a;
    a.kind = Kind::power_class;
    a.N = N;
    a.chi_fiber = N < 0 ? -N : N;  // the fiber at 1 of x -> x^N has |N| points
    return a;
}

MotiveAtom MotiveAtom::monomial(Exp a0, Exp b0) {
    if (a0 == 0 && b0 == 0) throw precondition_error("torus monomial class with zero exponents");
    MotiveAtom a;
    a.kind = Kind::monomial_torus;
    a.a = a0;
    a.b = b0;
    a.chi_fiber = 0;
    return a;
}

MotiveAtom MotiveAtom::face(const LaurentPoly& face_poly, Sign sign, const Face& geometry) {
    MotiveAtom a;
    a.kind = Kind::face_class;
    a.sign = sign;
    a.face_poly = face_poly;
    QuasiHomFactorization qh = quasi_hom_factor(face_poly, geometry);
    if (qh.branches.empty())
        throw precondition_error("face class needs a root; use a torus monomial class");
    Exp N = geometry.p * geometry.v0.first + geometry.q * geometry.v0.second;
    long by_rn = -qh.root_count() * static_cast<long>(N < 0 ? -N : N);
    // area path: chi = -2 r S / (s+1)
    Exp det = geometry.v0.first * geometry.v1.second - geometry.v0.second * geometry.v1.first;
    Rat S(det < 0 ? -det : det, 2);
    S.canonicalize();
    Rat by_area = Rat(-2) * Rat(qh.root_count()) * S / Rat(qh.lattice_length);
    by_area.canonicalize();
    if (by_area != Rat(by_rn))
        throw consistency_error("face class chi: area path and -r|N| path disagree");
    a.chi_fiber = by_rn;
    if (qh.branches.size() == 1 && qh.branches[0].degree == 1 && geometry.p == 1 &&
        qh.branches[0].multiplicity >= 1 && geometry.tag == FaceTag::local) {
        // x^A (y - mu x^q)^B
        SmoothShape s;
        s.A = qh.corner.first;
        s.B = qh.branches[0].multiplicity;
        s.q = geometry.q;
        s.mu = -qh.branches[0].factor[0];
        a.smooth = s;
    }
    return a;
}

MotiveAtom MotiveAtom::curve(Exp a0, Exp b0, Exp q0, const AlgebraicScalar& mu0) {
    MotiveAtom a;
    a.kind = Kind::curve_times_gm;
    a.a = a0;
    a.b = b0;
    a.q = q0;
    a.mu = mu0;
    a.chi_fiber = 0;
    return a;
}

int MotiveAtom::compare(const MotiveAtom& x, const MotiveAtom& y) {
    if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
    switch (x.kind) {
        case Kind::unit: return 0;
        case Kind::power_class: return x.N < y.N ? -1 : x.N > y.N ? 1 : 0;
        case Kind::monomial_torus:
            if (x.a != y.a) return x.a < y.a ? -1 : 1;
            return x.b < y.b ? -1 : x.b > y.b ? 1 : 0;
        case Kind::face_class: {
            if (x.sign != y.sign) return x.sign == Sign::plus ? -1 : 1;
            return LaurentPoly::compare(x.face_poly, y.face_poly);
        }
        case Kind::curve_times_gm: {
            if (x.a != y.a) return x.a < y.a ? -1 : 1;
            if (x.b != y.b) return x.b < y.b ? -1 : 1;
            if (x.q != y.q) return x.q < y.q ? -1 : 1;
            return AlgebraicScalar::compare(x.mu, y.mu);
        }
    }
    return 0;
}

std::string MotiveAtom::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::unit: return "[1]";
        case Kind::power_class:
            os << "[x^" << N << " : Gm -> Gm]";
            return os.str();
        case Kind::monomial_torus:
            os << "[x^" << a << "*y^" << b << " : Gm^2 -> Gm]";
            return os.str();
        case Kind::face_class:
            os << "[(" << face_poly.to_string() << ")" << (sign == Sign::minus ? "^-1" : "")
               << " : Gm^2 \\ V -> Gm]";
            return os.str();
        case Kind::curve_times_gm:
            os << "[x^" << a << "*xi^" << b << " : ((y = (" << mu.to_string() << ")*x^" << q
               << ") ∩ Gm^2) x Gm -> Gm]";
            return os.str();
    }
    return "";
}

// ---------------------------------------------------------------------------
// MotiveExpr

MotiveExpr MotiveExpr::single(const MotiveAtom& atom, LPoly coeff) {
    MotiveExpr e;
    e.add(atom, coeff);
    return e;
}

MotiveExpr& MotiveExpr::add(const MotiveAtom& atom, const LPoly& coeff) {
    if (coeff.is_zero()) return *this;
    auto it = terms_.find(atom);
    if (it == terms_.end()) {
        terms_[atom] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

MotiveExpr& MotiveExpr::operator+=(const MotiveExpr& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

MotiveExpr MotiveExpr::operator-() const {
    MotiveExpr r;
    for (const auto& [a, c] : terms_) r.terms_[a] = -c;
    return r;
}

MotiveExpr MotiveExpr::operator*(long k) const {
    MotiveExpr r;
    if (k == 0) return r;
    for (const auto& [a, c] : terms_) r.terms_[a] = c * k;
    return r;
}

bool operator==(const MotiveExpr& a, const MotiveExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (MotiveAtom::compare(ia->first, ib->first) != 0) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

std::string MotiveExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        std::string cs = c.to_string();
        if (!first) os << " + ";
        first = false;
        if (cs == "1") {
            os << a.to_string();
        } else if (cs == "-1") {
            os << "-" << a.to_string();
        } else if (cs.find_first_of("+- ") != std::string::npos && cs[0] != '-') {
            os << "(" << cs << ")*" << a.to_string();
        } else {
            os << cs << "*" << a.to_string();
        }
    }
    return os.str();
}

MotiveExpr normalize(const MotiveExpr& e) {
    // Pass 1: curve classes become torus monomial classes (Gm^2 projection).
    MotiveExpr r;
    for (const auto& [a, c] : e.terms()) {
        if (a.kind == MotiveAtom::Kind::curve_times_gm) {
            r.add(MotiveAtom::monomial(a.a, a.b), c);
        } else {
            r.add(a, c);
        }
    }
    // Pass 2: [x^{eps(A+Bq)}] + [x^{eps A}(y-mu x^q)^{eps B} on the complement]
    //         = [x^{eps A} z^{eps B} : Gm^2 -> Gm]  for matching coefficients.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, c] : r.terms()) {
            if (a.kind != MotiveAtom::Kind::face_class || !a.smooth) continue;
            Exp eps = a.sign == Sign::plus ? 1 : -1;
            Exp n = eps * (a.smooth->A + a.smooth->B * a.smooth->q);
            if (n == 0) continue;
            MotiveAtom pw = MotiveAtom::power(n);
            auto it = r.terms().find(pw);
            if (it == r.terms().end()) continue;
            if (!(it->second == c)) continue;  // only exact coefficient matches merge
            LPoly coeff = c;
            MotiveExpr next;
            for (const auto& [a2, c2] : r.terms()) {
                if (MotiveAtom::compare(a2, a) == 0 || MotiveAtom::compare(a2, pw) == 0)
                    continue;
                next.add(a2, c2);
            }
            next.add(MotiveAtom::monomial(eps * a.smooth->A, eps * a.smooth->B), coeff);
            r = next;
            changed = true;
            break;
        }
    }
    return r;
}

long euler_realization(const MotiveExpr& e) {
    long chi = 0;
    for (const auto& [a, c] : e.terms()) chi += a.chi_fiber * c.euler();
    return chi;
}

// ---------------------------------------------------------------------------
// Rational series over cones

std::vector<LatticePoint> parallelepiped_points(LatticePoint w1, LatticePoint w2) {
    Exp det = w1.first * w2.second - w1.second * w2.first;
    if (det == 0) throw precondition_error("degenerate parallelepiped");
    std::vector<LatticePoint> out;
    Exp lox = std::min({0L, w1.first, w2.first, w1.first + w2.first});
    Exp hix = std::max({0L, w1.first, w2.first, w1.first + w2.first});
    Exp loy = std::min({0L, w1.second, w2.second, w1.second + w2.second});
    Exp hiy = std::max({0L, w1.second, w2.second, w1.second + w2.second});
    for (Exp x = lox; x <= hix; ++x) {
        for (Exp y = loy; y <= hiy; ++y) {
            // (x,y) = s w1 + t w2 with s,t in (0,1]
            Exp s_num = x * w2.second - y * w2.first;   // s = s_num / det
            Exp t_num = w1.first * y - w1.second * x;   // t = t_num / det
            Exp d = det;
            if (d < 0) {
                s_num = -s_num;
                t_num = -t_num;
                d = -d;
            }
            if (s_num > 0 && s_num <= d && t_num > 0 && t_num <= d) out.push_back({x, y});
        }
    }
    return out;
}

namespace {

Exp apply(LinearForm f, LatticePoint v) { return f.first * v.first + f.second * v.second; }

RationalSeries::Term ray_term(LinearForm phi, LinearForm eta, LatticePoint w) {
    if (apply(phi, w) <= 0) throw precondition_error("phi must be positive on the generator");
    if (apply(eta, w) < 0) throw precondition_error("eta must be nonnegative on the cone");
    RationalSeries::Term t;
    t.e = -apply(eta, w);
    t.a = apply(phi, w);
    t.denom.push_back({-apply(eta, w), apply(phi, w)});
    return t;
}

void open2d_terms(LinearForm phi, LinearForm eta, LatticePoint w1, LatticePoint w2,
                  RationalSeries& out) {
    if (apply(phi, w1) <= 0 || apply(phi, w2) <= 0)
        throw precondition_error("phi must be positive on the generators");
    if (apply(eta, w1) < 0 || apply(eta, w2) < 0)
        throw precondition_error("eta must be nonnegative on the cone");
    for (const auto& p : parallelepiped_points(w1, w2)) {
        RationalSeries::Term t;
        t.e = -apply(eta, p);
        t.a = apply(phi, p);
        t.denom.push_back({-apply(eta, w1), apply(phi, w1)});
        t.denom.push_back({-apply(eta, w2), apply(phi, w2)});
        out.terms.push_back(t);
    }
}

}  // namespace

RationalSeries cone_series(LinearForm phi, LinearForm eta, const Cone& C) {
    RationalSeries s;
    switch (C.kind) {
        case Cone::Kind::empty: return s;
        case Cone::Kind::ray:
            s.terms.push_back(ray_term(phi, eta, C.w1));
            return s;
        case Cone::Kind::open2d:
            open2d_terms(phi, eta, C.w1, C.w2, s);
            return s;
        case Cone::Kind::halfopen2d:
            open2d_terms(phi, eta, C.w1, C.w2, s);
            s.terms.push_back(ray_term(phi, eta, C.w2));
            return s;
        default:
            throw precondition_error("cone_series: unsupported cone kind");
    }
}

LPoly limit_T_infinity(const RationalSeries& s) {
    LPoly out;
    for (const auto& t : s.terms) {
        Exp dsum = 0, esum = 0;
        for (const auto& [e, i] : t.denom) {
            if (i < 1) throw precondition_error("denominator exponent must be >= 1");
            dsum += i;
            esum += e;
        }
        if (t.denom.empty()) {
            if (t.a != 0) throw precondition_error("series term diverges as T -> infinity");
            out += LPoly::L_power(t.e);
            continue;
        }
        if (t.a > dsum) throw precondition_error("series term diverges as T -> infinity");
        if (t.a < dsum) continue;  // limit 0
        long sign = t.denom.size() % 2 == 0 ? 1 : -1;
        out += LPoly::L_power(t.e - esum, sign);
    }
    return out;
}

std::string RationalSeries::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "L^" << t.e << "*T^" << t.a;
        for (const auto& [e, i] : t.denom) os << "/(1 - L^" << e << "*T^" << i << ")";
    }
    return os.str();
}

}  // namespace newton
