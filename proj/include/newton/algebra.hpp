#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newton/error.hpp"

namespace newton {

using Rat = mpq_class;
using Int = mpz_class;

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

// Element of the top field of a tower Q(a_1,...,a_k).  Level 0 elements are plain
// rationals (tower() may be null).  A level-k element is a reduced coefficient vector
// over level k-1 in the generator a_k, deg < deg(minpoly_k).
class AlgebraicScalar {
  public:
    AlgebraicScalar() : level_(0), q_(0) {}
    AlgebraicScalar(long n) : level_(0), q_(n) {}  // NOLINT: implicit by design
    AlgebraicScalar(const Rat& q) : level_(0), q_(q) {}
    AlgebraicScalar(TowerPtr tower, int level, std::vector<AlgebraicScalar> coeffs);

    int level() const { return level_; }
    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return level_ == 0; }
    const Rat& rational() const;
    // Coefficient vector over the level below; valid for level() > 0.
    const std::vector<AlgebraicScalar>& coeffs() const { return c_; }

    AlgebraicScalar operator-() const;
    AlgebraicScalar& operator+=(const AlgebraicScalar& o);
    AlgebraicScalar& operator-=(const AlgebraicScalar& o);
    AlgebraicScalar& operator*=(const AlgebraicScalar& o);
    AlgebraicScalar& operator/=(const AlgebraicScalar& o);
    AlgebraicScalar inverse() const;
    AlgebraicScalar pow(long e) const;

    friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
    friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }
    friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) { return a *= b; }
    friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) { return a /= b; }
    friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);
    friend bool operator!=(const AlgebraicScalar& a, const AlgebraicScalar& b) { return !(a == b); }

    // Total order used for deterministic reports: (level, coeff vectors, rationals by value).
    static int compare(const AlgebraicScalar& a, const AlgebraicScalar& b);
    friend bool operator<(const AlgebraicScalar& a, const AlgebraicScalar& b) {
        return compare(a, b) < 0;
    }

    std::string to_string() const;

    // Lifts the scalar into a (deeper) compatible tower without changing its value.
    AlgebraicScalar lifted(const TowerPtr& tower) const;

  private:
    void normalize();
    TowerPtr tower_;  // null for rationals
    int level_;
    Rat q_;                          // level 0 payload
    std::vector<AlgebraicScalar> c_; // level > 0 payload
    friend class FieldTower;
};

// Dense univariate polynomial over the top field of a tower.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(TowerPtr tower, std::string var) : tower_(std::move(tower)), var_(std::move(var)) {}
    UniPoly(TowerPtr tower, std::string var, std::vector<AlgebraicScalar> coeffs);

    static UniPoly from_roots(const TowerPtr& tower, const std::string& var,
                              const std::vector<AlgebraicScalar>& roots);

    const std::string& var() const { return var_; }
    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<AlgebraicScalar>& coeffs() const { return c_; }
    const AlgebraicScalar& operator[](int i) const;
    const AlgebraicScalar& leading() const;
    AlgebraicScalar constant_term() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const AlgebraicScalar& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly monic() const;
    UniPoly derivative() const;
    AlgebraicScalar eval(const AlgebraicScalar& x) const;
    UniPoly shifted(const AlgebraicScalar& s) const;  // p(x + s)
    UniPoly scaled_arg(const AlgebraicScalar& s) const;  // p(s * x)

    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic

    std::string to_string() const;
    UniPoly lifted(const TowerPtr& tower) const;
    static int compare(const UniPoly& a, const UniPoly& b);  // (degree, lex coeffs)

  private:
    void normalize();
    TowerPtr tower_;
    std::string var_ = "s";
    std::vector<AlgebraicScalar> c_;
};

// Tower of simple extensions over Q.  Immutable; extending produces a new tower that
// shares its parent, so scalars of the parent embed unchanged.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
  public:
    struct Level {
        std::string name;
        UniPoly minpoly;  // monic, irreducible over the tower below, degree >= 2
    };

    static TowerPtr rationals();
    int height() const { return height_; }
    const Level& level(int i) const;  // 1-based: level(1) is the first extension
    const TowerPtr& parent() const { return parent_; }

    // The generator a_k of level k as a scalar of this tower.
    AlgebraicScalar generator(int k) const;
    AlgebraicScalar generator() const { return generator(height_); }

    std::string describe() const;

  private:
    friend TowerPtr adjoin_root(const TowerPtr&, const UniPoly&);
    friend class AlgebraicScalar;
    TowerPtr parent_;
    std::optional<Level> top_;
    int height_ = 0;
};

// True if `a` is the same tower as `b` or a prefix of it.
bool tower_is_prefix(const TowerPtr& a, const TowerPtr& b);
// The deeper of two compatible towers; throws if incompatible.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

struct SquarefreePart {
    UniPoly factor;
    int multiplicity;
};

struct IrreducibleFactor {
    UniPoly factor;  // monic irreducible
    int multiplicity;
};

struct Factorization {
    AlgebraicScalar unit;  // p = unit * prod factor^multiplicity
    std::vector<IrreducibleFactor> factors;
};

// p = unit * prod q_i^{m_i}, q_i monic square-free pairwise coprime.  Yun's algorithm.
std::vector<SquarefreePart> squarefree_decomposition(const UniPoly& p);

// Complete factorization into monic irreducibles over the polynomial's tower.
// Over extensions this is the Trager norm/resultant descent.  Deterministic order:
// factors sorted by (degree, lexicographic coefficient order).
Factorization factor_irreducible(const UniPoly& p);

// Extends the tower by a root of m (monic irreducible over the top level, deg >= 2).
// Rejects reducible m with the offending factorization in the message.
TowerPtr adjoin_root(const TowerPtr& tower, const UniPoly& m);

// Sylvester resultant of p and q.
AlgebraicScalar resultant(const UniPoly& p, const UniPoly& q);

// disc_s(P(s) - c) as a polynomial in the fresh variable c; deg P >= 1 required.
UniPoly face_discriminant(const UniPoly& P, const std::string& cvar = "c");

}  // namespace newton
