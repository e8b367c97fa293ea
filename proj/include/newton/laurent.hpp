#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "newton/algebra.hpp"

namespace newton {

using Exp = std::int64_t;
using LatticePoint = std::pair<Exp, Exp>;

// Ambient ring of a bivariate Laurent polynomial.
enum class Ring {
    poly,       // k[x,y]
    x_laurent,  // k[x^-1,x,y]
    y_laurent,  // k[x,y,y^-1]
};

// Exact bivariate Laurent polynomial over a field tower.  Terms map lattice
// exponent pairs to nonzero coefficients.
class LaurentPoly {
  public:
    using TermMap = std::map<LatticePoint, AlgebraicScalar>;

    LaurentPoly() : ring_(Ring::poly) {}
    LaurentPoly(TowerPtr tower, std::string xvar, std::string yvar, Ring ring = Ring::poly)
        : tower_(std::move(tower)), x_(std::move(xvar)), y_(std::move(yvar)), ring_(ring) {}
    LaurentPoly(TowerPtr tower, std::string xvar, std::string yvar, Ring ring, TermMap terms);

    static LaurentPoly monomial(const TowerPtr& tower, const std::string& xvar,
                                const std::string& yvar, Ring ring, Exp a, Exp b,
                                const AlgebraicScalar& c);
    static LaurentPoly constant(const TowerPtr& tower, const std::string& xvar,
                                const std::string& yvar, Ring ring, const AlgebraicScalar& c);

    const TowerPtr& tower() const { return tower_; }
    const std::string& xvar() const { return x_; }
    const std::string& yvar() const { return y_; }
    Ring ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::vector<LatticePoint> support() const;
    AlgebraicScalar coeff(Exp a, Exp b) const;
    AlgebraicScalar constant_coeff() const { return coeff(0, 0); }

    Exp min_x_exp() const;  // over the support; requires nonzero
    Exp min_y_exp() const;
    Exp max_x_exp() const;
    Exp max_y_exp() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool depends_on_x() const;
    bool depends_on_y() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator*(const AlgebraicScalar& s) const;
    LaurentPoly operator-(const AlgebraicScalar& s) const;  // f - constant
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly times_monomial(Exp a, Exp b, const AlgebraicScalar& c) const;
    LaurentPoly pow(int e) const;  // e >= 0

    LaurentPoly partial_x() const;
    LaurentPoly partial_y() const;

    AlgebraicScalar eval(const AlgebraicScalar& x0, const AlgebraicScalar& y0) const;
    // f(x0, y) as a univariate polynomial in y; requires min_y_exp() >= 0.
    UniPoly eval_x(const AlgebraicScalar& x0) const;
    UniPoly eval_y(const AlgebraicScalar& y0) const;

    // Retag / extend the coefficient tower.
    LaurentPoly lifted(const TowerPtr& tower) const;
    LaurentPoly renamed(const std::string& xvar, const std::string& yvar) const;
    LaurentPoly with_ring(Ring ring) const;

    std::string to_string() const;
    static int compare(const LaurentPoly& a, const LaurentPoly& b);

  private:
    void normalize();
    TowerPtr tower_;
    std::string x_ = "x";
    std::string y_ = "y";
    Ring ring_;
    TermMap terms_;
};

// One variable of a monomial substitution: coef * V^v_exp * (W + shift)^(source exp),
// the trailing factor only when has_w is set (then the source exponent must be >= 0).
struct VarImage {
    AlgebraicScalar coef;
    Exp v_exp = 0;
    bool has_w = false;
    AlgebraicScalar shift;
};

// General monomial-plus-shift substitution; the workhorse behind every Newton map.
LaurentPoly substitute(const LaurentPoly& f, const VarImage& x_image, const VarImage& y_image,
                       const std::string& vvar, const std::string& wvar, Ring ring);

// Local Newton transformation sigma_{(p,q,mu)}: f(mu^{q'} v^p, v^q (w + mu^{p'})) with
// the canonical Bezout pair p p' - q q' = 1, 0 <= p' <= q, 0 <= q' < p.
LaurentPoly newton_map_local(const LaurentPoly& f, Exp p, Exp q, const AlgebraicScalar& mu,
                             const std::string& vvar, const std::string& wvar);

// Newton transformation at infinity; the case dispatch follows the sign pattern of the
// primitive direction (p,q):
//   p>0,q>0 : f(mu^{q'} v^{-p}, v^{-q}(w+mu^{p'})),  q q' - p p' = 1
//   p>0,q<0 : f(mu^{q'} v^{-p}, v^{-q}(w+mu^{p'})),  p p' - q q' = 1
//   p<0,q>0 : f(v^{-p}(w+mu^{q'}), mu^{p'} v^{-q}),  p p' - q q' = 1
//   (0,1)   : f(w+mu, v^{-1})
//   (1,0)   : f(v^{-1}, w+mu)
LaurentPoly newton_map_infinity(const LaurentPoly& f, Exp p, Exp q, const AlgebraicScalar& mu,
                                const std::string& vvar, const std::string& wvar);

enum class AxisFlip { horizontal, vertical };

// Horizontal: f(x+mu, 1/y) with the variable swap folded in, i.e. (v,w) -> f(w+mu, 1/v).
// Vertical:   (v,w) -> f(1/v, w+mu).
LaurentPoly substitute_axis_flip(const LaurentPoly& f, const AlgebraicScalar& mu, AxisFlip which,
                                 const std::string& vvar, const std::string& wvar);

// Height b_0 - b_d of the local Newton diagram.
Exp height(const LaurentPoly& f);

// Successor variable names used when descending the Newton algorithm:
// (x,y) -> (v,w) -> (v1,w1) -> (v2,w2) -> ...
std::pair<std::string, std::string> next_var_names(const LaurentPoly& f);

}  // namespace newton
