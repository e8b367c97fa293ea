#include "newton/invariants.hpp"

#include "factor_detail.hpp"

#include <algorithm>
#include <functional>

namespace newton {

// ---------------------------------------------------------------------------
// Critical values via resultant elimination

namespace {

LaurentPoly swap_vars(const LaurentPoly& f) {
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : f.terms()) t[{e.second, e.first}] = c;
    return LaurentPoly(f.tower(), f.yvar(), f.xvar(), f.ring(), std::move(t));
}

// Res_y(A, B) as a polynomial in x, by interpolation at degree-preserving nodes.
UniPoly resultant_in_y(const LaurentPoly& A, const LaurentPoly& B) {
    if (A.is_zero() || B.is_zero()) throw precondition_error("resultant of zero polynomial");
    TowerPtr tw = common_tower(A.tower(), B.tower());
    Exp dyA = std::max<Exp>(A.max_y_exp(), 0), dyB = std::max<Exp>(B.max_y_exp(), 0);
    Exp dxA = std::max<Exp>(A.max_x_exp(), 0), dxB = std::max<Exp>(B.max_x_exp(), 0);
    Exp D = dyA * dxB + dyB * dxA;
    std::vector<AlgebraicScalar> xs, ys;
    long r = 0;
    int attempts = 0;
    while (static_cast<Exp>(xs.size()) <= D) {
        if (++attempts > 8 * (D + 2))
            throw consistency_error("resultant interpolation failed to find good nodes");
        AlgebraicScalar x0{Rat(r++)};
        UniPoly Ay = A.eval_x(x0);
        UniPoly By = B.eval_x(x0);
        if (Ay.degree() != dyA || By.degree() != dyB) continue;  // leading drop
        AlgebraicScalar val;
        if (dyA == 0) {
            val = Ay.constant_term().pow(dyB);
        } else if (dyB == 0) {
            val = By.constant_term().pow(dyA);
        } else {
            val = resultant(Ay, By);
        }
        xs.push_back(x0);
        ys.push_back(val);
    }
    return detail::interpolate(tw, A.xvar(), xs, ys);
}

std::pair<AlgebraicScalar, TowerPtr> root_of(const TowerPtr& tower, const UniPoly& factor) {
    if (factor.degree() == 1) return {-factor[0], tower ? tower : FieldTower::rationals()};
    TowerPtr ext = adjoin_root(tower, factor);
    return {ext->generator(), ext};
}

}  // namespace

std::vector<AlgebraicScalar> critical_values(const LaurentPoly& f) {
    std::vector<AlgebraicScalar> out;
    if (f.is_zero()) return out;
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("critical values need f in k[x,y]");
    LaurentPoly fx = f.partial_x();
    LaurentPoly fy = f.partial_y();
    if (fx.is_zero() && fy.is_zero()) return out;
    if (fy.is_zero()) {
        if (fx.max_x_exp() >= 1)
            throw precondition_error("non-isolated singularities: f depends on x only");
        return out;
    }
    if (fx.is_zero()) {
        if (fy.max_y_exp() >= 1)
            throw precondition_error("non-isolated singularities: f depends on y only");
        return out;
    }
    UniPoly Rx = resultant_in_y(fx, fy);
    UniPoly Ry = resultant_in_y(swap_vars(fx), swap_vars(fy));
    if (Rx.is_zero() || Ry.is_zero())
        throw precondition_error("non-isolated singularities: Jacobian ideal is not "
                                 "zero-dimensional (vanishing resultant witness)");
    if (Rx.degree() < 1) return out;
    Factorization fac = factor_irreducible(Rx);
    for (const auto& fc : fac.factors) {
        auto [x0, t1] = root_of(f.tower(), fc.factor);
        UniPoly gx = fx.lifted(t1).eval_x(x0);
        UniPoly gy = fy.lifted(t1).eval_x(x0);
        UniPoly g = UniPoly::gcd(gx, gy);
        if (g.degree() < 1) continue;
        Factorization yfac = factor_irreducible(g);
        for (const auto& yc : yfac.factors) {
            auto [y0, t2] = root_of(t1, yc.factor);
            AlgebraicScalar vx = fx.lifted(t2).eval(x0.lifted(t2), y0);
            AlgebraicScalar vy = fy.lifted(t2).eval(x0.lifted(t2), y0);
            if (!vx.is_zero() || !vy.is_zero())
                throw consistency_error("elimination produced a non-critical point");
            AlgebraicScalar value = f.lifted(t2).eval(x0.lifted(t2), y0);
            bool dup = false;
            for (const auto& v : out)
                if (v.level() == value.level() && v.tower() == value.tower() && v == value)
                    dup = true;
            if (!dup) out.push_back(value);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The local motive (S_{f^eps, x != 0})_{((0,0),0)} along the Newton tree

namespace {

MotiveExpr base_case_motive(const BaseCase& bc, Sign eps) {
    MotiveExpr out;
    long s = eps == Sign::plus ? 1 : -1;
    if (bc.kind == BaseCase::Kind::monomial && bc.m == 0) {
        // f = u x^{-M}: nonzero motive only when -eps M > 0
        if (-s * bc.M > 0) out.add(MotiveAtom::power(-s * bc.M), LPoly(1));
        return out;
    }
    // monomial with m > 0 or smooth branch: -[x^{-M} y^m] for eps = + and -M > 0
    if (eps == Sign::plus && -bc.M > 0)
        out.add(MotiveAtom::monomial(-bc.M, bc.m), LPoly(-1));
    return out;
}

long base_case_chi(const BaseCase& bc, Sign eps) {
    long s = eps == Sign::plus ? 1 : -1;
    if (bc.kind == BaseCase::Kind::monomial && bc.m == 0)
        return -s * bc.M > 0 ? (bc.M < 0 ? -bc.M : bc.M) : 0;
    return 0;
}

bool face_in(const std::vector<const Face*>& members, const Face* f) {
    return std::find(members.begin(), members.end(), f) != members.end();
}

MotiveExpr local_motive_node(const NewtonTreeNode& node, Sign eps) {
    if (node.base) return base_case_motive(*node.base, eps);
    MotiveExpr out;
    long s = eps == Sign::plus ? 1 : -1;
    auto members = eps_classification(node.poly, node.polygon, eps);
    const Face* gh = node.polygon.gamma_h();
    Exp a = gh->v0.first, b = gh->v0.second;
    if (b == 0) {
        if (face_in(members, gh)) out.add(MotiveAtom::power(s * a), LPoly(1));
    } else if (eps == Sign::plus && face_in(members, gh)) {
        out.add(MotiveAtom::monomial(a, b), LPoly(-1));
    }
    for (const Face* fc : members) {
        if (fc == gh) continue;
        if (fc->dim == 0) {
            out.add(MotiveAtom::monomial(s * fc->v0.first, s * fc->v0.second), LPoly(-1));
        } else {
            out.add(MotiveAtom::face(face_polynomial(node.poly, *fc), eps, *fc), LPoly(1));
        }
    }
    for (const auto& edge : node.children) {
        const Face& face = node.polygon.faces[edge.face_index];
        if (eps == Sign::minus && !face_in(members, &face)) continue;
        out += local_motive_node(*edge.child, eps) * edge.degree;
    }
    return out;
}

long local_chi_node(const NewtonTreeNode& node, Sign eps) {
    if (node.base) return base_case_chi(*node.base, eps);
    long chi = 0;
    auto members = eps_classification(node.poly, node.polygon, eps);
    const Face* gh = node.polygon.gamma_h();
    Exp a = gh->v0.first, b = gh->v0.second;
    if (b == 0 && face_in(members, gh)) chi += a < 0 ? -a : a;
    for (const Face* fc : members) {
        if (fc == gh || fc->dim != 1) continue;
        Rat area = area_with_respect_to(*fc, node.poly);
        Rat term = Rat(-2) * area;
        term.canonicalize();
        if (term.get_den() != 1) throw consistency_error("non-integral chi contribution");
        chi += term.get_num().get_si();
    }
    for (const auto& edge : node.children) {
        const Face& face = node.polygon.faces[edge.face_index];
        if (eps == Sign::minus && !face_in(members, &face)) continue;
        chi += edge.degree * local_chi_node(*edge.child, eps);
    }
    return chi;
}

}  // namespace

LocalMotiveResult local_motive(const LaurentPoly& f, Sign eps) {
    if (f.is_zero()) throw precondition_error("local motive of the zero polynomial");
    if (f.min_y_exp() < 0) throw precondition_error("local motive needs f in k[x^-1,x,y]");
    NewtonTree tree = newton_algorithm_local(f);
    LocalMotiveResult res;
    res.motive = local_motive_node(*tree.root, eps);
    res.chi = euler_realization(res.motive);
    res.tree_node_id = tree.root->id;
    long direct = local_chi_node(*tree.root, eps);
    if (direct != res.chi)
        throw consistency_error("local motive: Euler realization disagrees with the area path");
    return res;
}

long local_chi(const LaurentPoly& f, Sign eps) {
    NewtonTree tree = newton_algorithm_local(f);
    return local_chi_node(*tree.root, eps);
}

// ---------------------------------------------------------------------------
// S_{f, infinity}

MotiveWithChi milnor_fiber_at_infinity(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("Milnor fiber at infinity of zero");
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("Milnor fiber at infinity needs f in k[x,y]");
    if (!f.depends_on_x() || !f.depends_on_y())
        throw precondition_error("Milnor fiber at infinity: univariate input");
    LaurentPoly g = f;
    if (f.coeff(0, 0).is_zero()) g = f - AlgebraicScalar(Rat(-1));  // make (0,0) a support point
    MotiveWithChi out;
    NewtonPolygon infin = polygon_infinity(g);
    if (infin.segment) {
        // g = P(x^a y^b) up to the added constant; S = [1/(x^a y^b)^d : Gm^2 -> Gm]
        const Face* seg = infin.one_faces()[0];
        LatticePoint far = seg->v0 == LatticePoint{0, 0} ? seg->v1 : seg->v0;
        out.motive.add(MotiveAtom::monomial(-far.first, -far.second), LPoly(1));
        out.chi = euler_realization(out.motive);
        out.chi_terms = {0};
        return out;
    }
    long direct_chi = 0;
    // axis vertices first: [1/y^{b0}] then [1/x^{a0}]
    for (const auto& face : infin.faces) {
        if (face.dim != 0 || face.contains_origin()) continue;
        if (face.v0.first == 0 && face.v0.second > 0) {
            out.motive.add(MotiveAtom::power(-face.v0.second), LPoly(1));
            out.chi_terms.push_back(face.v0.second);
            direct_chi += face.v0.second;
        }
    }
    for (const auto& face : infin.faces) {
        if (face.dim != 0 || face.contains_origin()) continue;
        if (face.v0.second == 0 && face.v0.first > 0) {
            out.motive.add(MotiveAtom::power(-face.v0.first), LPoly(1));
            out.chi_terms.push_back(face.v0.first);
            direct_chi += face.v0.first;
        }
    }
    for (const auto& face : infin.faces) {
        if (face.contains_origin()) continue;
        if (face.dim == 0 && (face.v0.first == 0 || face.v0.second == 0)) continue;
        int eps = eps_minus(face, infin);
        if (eps == 0) {
            if (face.dim == 0) out.chi_terms.push_back(0);
            continue;
        }
        if (face.dim == 0) {
            out.motive.add(MotiveAtom::monomial(-face.v0.first, -face.v0.second), LPoly(eps));
            out.chi_terms.push_back(0);
        } else {
            MotiveAtom atom = MotiveAtom::face(face_polynomial(g, face), Sign::minus, face);
            out.motive.add(atom, LPoly(eps));
            out.chi_terms.push_back(eps * atom.chi_fiber);
            Rat area = area_with_respect_to(face, g);
            Rat t = Rat(-2 * eps) * area;
            t.canonicalize();
            direct_chi += t.get_num().get_si();
        }
    }
    // recursion over the one-dimensional faces of N_infinity(g) not through the origin
    NewtonTree tree = newton_algorithm_infinity(g);
    for (const auto& edge : tree.root->children) {
        const Face& face = tree.root->polygon.faces[edge.face_index];
        if (face.contains_origin()) continue;
        MotiveExpr sub = local_motive_node(*edge.child, Sign::minus) * edge.degree;
        long sub_chi = edge.degree * local_chi_node(*edge.child, Sign::minus);
        out.motive += sub;
        out.chi_terms.push_back(euler_realization(sub));
        direct_chi += sub_chi;
    }
    out.chi = euler_realization(out.motive);
    if (out.chi != direct_chi)
        throw consistency_error("S_{f,infinity}: Euler realization disagrees with the "
                                "Kouchnirenko formula");
    return out;
}

// ---------------------------------------------------------------------------
// S_{f,a}^infinity

MotiveWithChi nearby_cycles_at_infinity(const LaurentPoly& f, const AlgebraicScalar& a) {
    if (f.is_zero()) throw precondition_error("nearby cycles of the zero polynomial");
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("nearby cycles at infinity need f in k[x,y]");
    if (!f.depends_on_x() || !f.depends_on_y())
        throw precondition_error("nearby cycles at infinity: univariate input");
    TowerPtr tw = common_tower(f.tower(), a.tower());
    LaurentPoly g = f.lifted(tw) - a.lifted(tw);
    MotiveWithChi out;
    if (g.is_monomial()) {
        out.chi_terms = {0};
        return out;  // S_{x^a y^b, 0}^infinity = 0
    }
    NewtonPolygon tilde = polygon_tilde(g);
    if (tilde.segment) {
        const Face* seg = tilde.one_faces()[0];
        if (seg->p * seg->q >= 0) {
            out.chi_terms = {0};
            return out;
        }
        long direct_chi = 0;
        const Face* lo = tilde.vertices()[0];
        const Face* hi = tilde.vertices()[1];
        if (!(lo->v0 == LatticePoint{0, 0})) {
            int e = eps_plus(*lo, tilde);
            if (e != 0) out.motive.add(MotiveAtom::monomial(lo->v0.first, lo->v0.second),
                                       LPoly(e));
            out.chi_terms.push_back(0);
        }
        {
            int e = eps_plus(*hi, tilde);
            if (e != 0) out.motive.add(MotiveAtom::monomial(hi->v0.first, hi->v0.second),
                                       LPoly(e));
            out.chi_terms.push_back(0);
        }
        int eseg = eps_plus(*seg, tilde);
        if (eseg != 0) {
            MotiveAtom atom = MotiveAtom::face(face_polynomial(g, *seg), Sign::plus, *seg);
            out.motive.add(atom, LPoly(eseg));
            out.chi_terms.push_back(eseg * atom.chi_fiber);
            direct_chi += eseg * atom.chi_fiber;
        }
        if (seg->N != 0) {
            QuasiHomFactorization qh = quasi_hom_factor(face_polynomial(g, *seg), *seg);
            Exp absN = seg->N < 0 ? -seg->N : seg->N;
            for (const auto& br : qh.branches) {
                out.motive.add(MotiveAtom::monomial(absN, br.multiplicity),
                               LPoly(-br.degree));
                out.chi_terms.push_back(0);
            }
        }
        out.chi = euler_realization(out.motive);
        if (out.chi != direct_chi)
            throw consistency_error("S_{f,a}^infinity (segment): chi paths disagree");
        return out;
    }
    long direct_chi = 0;
    for (const auto& face : tilde.faces) {
        int e = eps_plus(face, tilde);
        if (face.dim == 0) {
            out.chi_terms.push_back(0);
            if (e == 0) continue;
            out.motive.add(MotiveAtom::monomial(face.v0.first, face.v0.second), LPoly(e));
            continue;
        }
        if (e == 0) {
            out.chi_terms.push_back(0);
            continue;
        }
        MotiveAtom atom = MotiveAtom::face(face_polynomial(g, face), Sign::plus, face);
        out.motive.add(atom, LPoly(e));
        out.chi_terms.push_back(e * atom.chi_fiber);
        direct_chi += e * atom.chi_fiber;
    }
    NewtonTree tree = newton_algorithm_infinity(g);
    for (const auto& edge : tree.root->children) {
        MotiveExpr sub = local_motive_node(*edge.child, Sign::plus) * edge.degree;
        long sub_chi = edge.degree * local_chi_node(*edge.child, Sign::plus);
        out.motive += sub;
        out.chi_terms.push_back(euler_realization(sub));
        direct_chi += sub_chi;
    }
    out.chi = euler_realization(out.motive);
    if (out.chi != direct_chi)
        throw consistency_error("S_{f,a}^infinity: Euler realization disagrees with the "
                                "area recursion");
    return out;
}

long lambda_invariant(const LaurentPoly& f, const AlgebraicScalar& a) {
    MotiveWithChi nearby = nearby_cycles_at_infinity(f, a);
    return -nearby.chi;
}

// ---------------------------------------------------------------------------
// Bifurcation report

BifurcationReport bifurcation_report(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("bifurcation report of the zero polynomial");
    if (!f.depends_on_x() || !f.depends_on_y())
        throw precondition_error("bifurcation report: univariate input");
    BifurcationReport rep;
    try {
        critical_values(f);
    } catch (const precondition_error& e) {
        rep.isolated = false;
        rep.isolated_note = e.what();
    }
    rep.b_newton = newton_bifurcation_set(f);
    rep.motive_at_infinity = milnor_fiber_at_infinity(f);
    rep.chi_generic = rep.motive_at_infinity.chi;
    for (const auto& orbit : rep.b_newton) {
        CandidateReport cr;
        cr.orbit = orbit;
        auto [a, tw] = root_of(f.tower(), orbit.minpoly);
        (void)tw;
        cr.nearby = nearby_cycles_at_infinity(f, a);
        cr.lambda = -cr.nearby.chi;
        rep.lambda_total += cr.lambda * orbit.minpoly.degree();
        rep.candidates.push_back(std::move(cr));
    }
    rep.mu_total = 1 - rep.chi_generic - rep.lambda_total;
    // B^top = disc(f) ∪ { orbits with lambda != 0 }
    for (const auto& cr : rep.candidates) {
        bool is_disc = false;
        for (const auto& tag : cr.orbit.provenance)
            if (tag == "discriminant") is_disc = true;
        if (is_disc || cr.lambda != 0) rep.b_top.push_back(cr.orbit);
    }
    sort_and_merge_orbits(rep.b_top);
    // deterministic generic sentinel: a rational value away from every candidate
    long r = 7;
    for (bool ok = false; !ok;) {
        ok = true;
        for (const auto& orbit : rep.b_newton)
            if (orbit.minpoly.eval(AlgebraicScalar(Rat(r))).is_zero()) ok = false;
        if (!ok) ++r;
    }
    rep.sentinel_value = Rat(r);
    rep.sentinel_ok = lambda_invariant(f, AlgebraicScalar(Rat(r))) == 0;
    return rep;
}

}  // namespace newton
