#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "newton/lattice.hpp"

namespace newton {

// Element of Z[L, L^-1]: exponent -> integer coefficient.
class LPoly {
  public:
    LPoly() = default;
    explicit LPoly(long c) {
        if (c) c_[0] = c;
    }
    static LPoly L_power(Exp e, long c = 1) {
        LPoly p;
        if (c) p.c_[e] = c;
        return p;
    }
    bool is_zero() const { return c_.empty(); }
    const std::map<Exp, long>& coeffs() const { return c_; }
    LPoly& operator+=(const LPoly& o);
    LPoly operator-() const;
    LPoly operator*(long k) const;
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }
    long euler() const;  // chi(L^k) = 1, so the coefficient sum
    std::string to_string() const;

  private:
    std::map<Exp, long> c_;
};

// Pattern x^A (y - mu x^q)^B, the face-polynomial shape of a smooth branch; the
// rewrite rules of normalize() act on these.
struct SmoothShape {
    Exp A, B, q;
    AlgebraicScalar mu;
};

struct MotiveAtom {
    enum class Kind {
        unit,            // the class of a point (L-powers live in the coefficient)
        power_class,     // [x^N : Gm -> Gm],  N != 0
        monomial_torus,  // [x^a y^b : Gm^2 -> Gm], (a,b) != (0,0)
        face_class,      // [f_gamma^eps : Gm^2 \ V(f_gamma) -> Gm]
        curve_times_gm,  // [x^a xi^b : ((y = mu x^q) ∩ Gm^2) x Gm -> Gm]
    };
    Kind kind = Kind::unit;
    Exp N = 0;     // power_class
    Exp a = 0, b = 0;  // monomial_torus / curve_times_gm exponents
    Sign sign = Sign::plus;          // face_class
    LaurentPoly face_poly;           // face_class
    long chi_fiber = 1;              // chi_c of the fiber at 1
    std::optional<SmoothShape> smooth;  // face_class of smooth-branch shape
    Exp q = 0;                       // curve_times_gm
    AlgebraicScalar mu;              // curve_times_gm

    static MotiveAtom unit_atom();
    static MotiveAtom power(Exp N);
    static MotiveAtom monomial(Exp a, Exp b);
    // chi is computed through -r|N| and through the area path; they must agree.
    static MotiveAtom face(const LaurentPoly& face_poly, Sign sign, const Face& geometry);
    static MotiveAtom curve(Exp a, Exp b, Exp q, const AlgebraicScalar& mu);

    static int compare(const MotiveAtom& x, const MotiveAtom& y);
    std::string to_string() const;
};

struct AtomLess {
    bool operator()(const MotiveAtom& x, const MotiveAtom& y) const {
        return MotiveAtom::compare(x, y) < 0;
    }
};

class MotiveExpr {
  public:
    MotiveExpr() = default;
    static MotiveExpr single(const MotiveAtom& atom, LPoly coeff = LPoly(1));
    bool is_zero() const { return terms_.empty(); }
    const std::map<MotiveAtom, LPoly, AtomLess>& terms() const { return terms_; }
    MotiveExpr& add(const MotiveAtom& atom, const LPoly& coeff);
    MotiveExpr& operator+=(const MotiveExpr& o);
    MotiveExpr operator-() const;
    MotiveExpr operator*(long k) const;
    friend MotiveExpr operator+(MotiveExpr a, const MotiveExpr& b) { return a += b; }
    friend MotiveExpr operator-(MotiveExpr a, const MotiveExpr& b) { return a += -b; }
    friend bool operator==(const MotiveExpr& a, const MotiveExpr& b);
    std::string to_string() const;

  private:
    std::map<MotiveAtom, LPoly, AtomLess> terms_;
};

// Rewrites curve classes to torus monomial classes and merges the power-class /
// smooth-branch face-class pairs into monomial classes (the Grothendieck-ring
// identities used to collapse the base cases); cancellation is automatic.
MotiveExpr normalize(const MotiveExpr& e);

// chi_c of the fiber at 1.
long euler_realization(const MotiveExpr& e);

// Sum of terms L^e T^a / prod_j (1 - L^{e_j} T^{i_j}), i_j >= 1.
struct RationalSeries {
    struct Term {
        Exp e = 0, a = 0;
        std::vector<std::pair<Exp, Exp>> denom;
    };
    std::vector<Term> terms;
    std::string to_string() const;
};

using LinearForm = std::pair<Exp, Exp>;  // (c1, c2) acting as c1*k + c2*l

// The summation S_{phi,eta,C}(T) over the lattice points of C with phi, eta
// nonnegative on C and phi positive on the generators.
RationalSeries cone_series(LinearForm phi, LinearForm eta, const Cone& C);

// T -> infinity limit of a rational series of the cone kind.
LPoly limit_T_infinity(const RationalSeries& s);

// Lattice points of the half-open parallelepiped (0,1] w1 + (0,1] w2.
std::vector<LatticePoint> parallelepiped_points(LatticePoint w1, LatticePoint w2);

}  // namespace newton
