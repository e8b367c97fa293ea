// Irreducible factorization over field towers: square-free split (Yun), then the
// Trager norm/resultant descent level by level down to Q.

#include <algorithm>

#include "factor_detail.hpp"
#include "newton/algebra.hpp"

namespace newton {

namespace detail {

UniPoly generator_to_var(const AlgebraicScalar& x, int L, const TowerPtr& tower,
                         const std::string& tvar) {
    if (x.level() < L) return UniPoly(tower, tvar, {x});
    std::vector<AlgebraicScalar> c = x.coeffs();
    return UniPoly(tower, tvar, std::move(c));
}

UniPoly interpolate(const TowerPtr& tower, const std::string& var,
                    const std::vector<AlgebraicScalar>& xs,
                    const std::vector<AlgebraicScalar>& ys) {
    UniPoly result(tower, var);
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis(tower, var, {AlgebraicScalar(Rat(1))});
        AlgebraicScalar denom(Rat(1));
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(tower, var, {-xs[j], AlgebraicScalar(Rat(1))});
            denom *= xs[i] - xs[j];
        }
        result = result + basis * (ys[i] / denom);
    }
    return result;
}

}  // namespace detail

namespace {

using detail::generator_to_var;
using detail::interpolate;

int max_coeff_level(const UniPoly& p) {
    int lvl = 0;
    for (const auto& c : p.coeffs()) lvl = std::max(lvl, c.level());
    return lvl;
}

std::vector<UniPoly> factor_squarefree_tower(const UniPoly& q0);

// Trager descent for monic squarefree q over the top generator of its tower.
std::vector<UniPoly> trager_top_level(const UniPoly& q) {
    const TowerPtr tower = q.tower();
    const TowerPtr parent = tower->parent() ? tower->parent() : FieldTower::rationals();
    int L = tower->height();
    const std::string tvar = "@t";
    const UniPoly& m = tower->level(L).minpoly;
    UniPoly mt(tower, tvar, m.coeffs());
    for (long kk = 0; kk <= 60; ++kk) {
        long k = (kk % 2 == 0) ? kk / 2 : -(kk / 2 + 1);
        AlgebraicScalar ks{Rat(k)};
        int D = m.degree() * q.degree();
        std::vector<AlgebraicScalar> xs, ys;
        for (int i = 0; i <= D; ++i) {
            AlgebraicScalar s0{Rat(i)};
            // B(t) = q(s0 - k t) with the generator replaced by t
            UniPoly B(tower, tvar);
            UniPoly arg(tower, tvar, {s0, -ks});
            UniPoly acc(tower, tvar, {AlgebraicScalar(Rat(1))});
            for (int j = 0; j <= q.degree(); ++j) {
                B = B + generator_to_var(q[j], L, tower, tvar) * acc;
                acc = acc * arg;
            }
            xs.push_back(s0);
            ys.push_back(resultant(mt, B));  // value lives below level L
        }
        // The norm N(s) has coefficients in the parent field.
        std::vector<AlgebraicScalar> xs_p, ys_p;
        for (auto& x : xs) xs_p.push_back(x.lifted(parent));
        bool ok = true;
        for (auto& y : ys) {
            if (y.level() >= L) {
                ok = false;
                break;
            }
            ys_p.push_back(y.lifted(parent));
        }
        if (!ok) throw consistency_error("norm did not descend a tower level");
        UniPoly N = interpolate(parent, q.var(), xs_p, ys_p);
        if (N.degree() != D) continue;
        if (UniPoly::gcd(N, N.derivative()).degree() != 0) continue;
        std::vector<UniPoly> nf = factor_squarefree_tower(N);
        AlgebraicScalar alpha = tower->generator(L);
        std::vector<UniPoly> out;
        for (const auto& Ni : nf) {
            UniPoly shifted = Ni.lifted(tower).shifted(ks * alpha);
            UniPoly g = UniPoly::gcd(q, shifted);
            if (g.degree() > 0) out.push_back(g.monic());
        }
        int total = 0;
        for (const auto& g : out) total += g.degree();
        if (total != q.degree()) continue;  // root collision; try another shift
        std::sort(out.begin(), out.end(),
                  [](const UniPoly& a, const UniPoly& b) { return UniPoly::compare(a, b) < 0; });
        return out;
    }
    throw consistency_error("Trager descent found no squarefree norm");
}

// Monic irreducible factors of a squarefree q over the top field of its tower.
std::vector<UniPoly> factor_squarefree_tower(const UniPoly& q0) {
    const TowerPtr tower = q0.tower() ? q0.tower() : FieldTower::rationals();
    UniPoly q = q0.monic().lifted(tower);
    if (q.degree() <= 0) return {};
    if (q.degree() == 1) return {q};
    if (tower->height() == 0) return detail::factor_squarefree_rational(q);
    if (max_coeff_level(q) == 0) {
        // Cheap pre-split over Q, then refine each piece over the extension.
        std::vector<UniPoly> out;
        for (auto& f : detail::factor_squarefree_rational(q)) {
            if (f.degree() == 1) {
                out.push_back(f.lifted(tower));
                continue;
            }
            std::vector<UniPoly> sub = trager_top_level(f.lifted(tower));
            out.insert(out.end(), sub.begin(), sub.end());
        }
        std::sort(out.begin(), out.end(),
                  [](const UniPoly& a, const UniPoly& b) { return UniPoly::compare(a, b) < 0; });
        return out;
    }
    return trager_top_level(q);
}

}  // namespace

Factorization factor_irreducible(const UniPoly& p) {
    if (p.is_zero()) throw precondition_error("factorization of the zero polynomial");
    Factorization out;
    out.unit = p.leading();
    if (p.degree() == 0) return out;
    std::vector<SquarefreePart> sq = squarefree_decomposition(p);
    for (const auto& part : sq) {
        std::vector<UniPoly> fs = factor_squarefree_tower(part.factor);
        for (auto& f : fs) out.factors.push_back({std::move(f), part.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
                  int c = UniPoly::compare(a.factor, b.factor);
                  if (c != 0) return c < 0;
                  return a.multiplicity < b.multiplicity;
              });
    return out;
}

TowerPtr adjoin_root(const TowerPtr& tower, const UniPoly& m) {
    TowerPtr base = tower ? tower : FieldTower::rationals();
    if (m.degree() < 2)
        throw precondition_error("adjoin_root: degree must be >= 2 (degree " +
                                 std::to_string(m.degree()) +
                                 " means the root is already present)");
    UniPoly mm = m.monic().lifted(base);
    Factorization fac = factor_irreducible(mm);
    if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1) {
        std::string witness;
        for (const auto& f : fac.factors) {
            if (!witness.empty()) witness += " * ";
            witness += "(" + f.factor.to_string() + ")";
            if (f.multiplicity > 1) witness += "^" + std::to_string(f.multiplicity);
        }
        throw precondition_error("adjoin_root: reducible minimal polynomial: " + witness);
    }
    auto t = std::make_shared<FieldTower>();
    t->parent_ = base;
    t->height_ = base->height() + 1;
    t->top_ = FieldTower::Level{"a" + std::to_string(t->height_), mm};
    return t;
}

}  // namespace newton
