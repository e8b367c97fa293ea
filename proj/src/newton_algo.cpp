#include "newton/newton_algo.hpp"

#include <algorithm>
#include <numeric>

#include "factor_detail.hpp"

namespace newton {

// critical_values lives in the invariants layer (resultant elimination); declared in
// newton/invariants.hpp.
std::vector<AlgebraicScalar> critical_values(const LaurentPoly& f);

// ---------------------------------------------------------------------------
// Bivariate helpers over k[x][y]: enough gcd machinery for the germ test.

namespace {

struct PXY {
    TowerPtr tower;
    std::vector<UniPoly> c;  // index = y-degree, entries polys in x
};

void trim(PXY& f) {
    while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
}

int deg(const PXY& f) { return static_cast<int>(f.c.size()) - 1; }

PXY from_laurent(const LaurentPoly& f) {
    PXY r;
    r.tower = f.tower();
    for (const auto& [e, k] : f.terms()) {
        if (e.first < 0 || e.second < 0)
            throw precondition_error("bivariate helper needs nonnegative exponents");
        if (static_cast<size_t>(e.second) >= r.c.size())
            r.c.resize(e.second + 1, UniPoly(r.tower, "x"));
        std::vector<AlgebraicScalar> coeffs = r.c[e.second].coeffs();
        if (static_cast<size_t>(e.first) >= coeffs.size()) coeffs.resize(e.first + 1);
        coeffs[e.first] += k;
        r.c[e.second] = UniPoly(r.tower, "x", std::move(coeffs));
    }
    trim(r);
    return r;
}

UniPoly content(const PXY& f) {
    UniPoly g(f.tower, "x");
    for (const auto& p : f.c) g = UniPoly::gcd(g, p);
    return g;
}

PXY divide_coeffs(const PXY& f, const UniPoly& d) {
    PXY r;
    r.tower = f.tower;
    for (const auto& p : f.c) {
        auto [q, rem] = UniPoly::divmod(p, d);
        if (!rem.is_zero()) throw consistency_error("inexact content division");
        r.c.push_back(q);
    }
    trim(r);
    return r;
}

PXY pp(const PXY& f) {
    if (f.c.empty()) return f;
    UniPoly cont = content(f);
    PXY r = divide_coeffs(f, cont);
    // normalize the leading coefficient's leading scalar to 1
    AlgebraicScalar lead = r.c.back().leading();
    for (auto& p : r.c) p = p * lead.inverse();
    return r;
}

PXY mul_px(const PXY& f, const UniPoly& s) {
    PXY r;
    r.tower = f.tower;
    for (const auto& p : f.c) r.c.push_back(p * s);
    trim(r);
    return r;
}

PXY sub(const PXY& a, const PXY& b) {
    PXY r = a;
    while (r.c.size() < b.c.size()) r.c.push_back(UniPoly(r.tower, "x"));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    trim(r);
    return r;
}

PXY shift_y(const PXY& f, int k) {
    PXY r;
    r.tower = f.tower;
    r.c.assign(k, UniPoly(f.tower, "x"));
    for (const auto& p : f.c) r.c.push_back(p);
    return r;
}

PXY deriv_y(const PXY& f) {
    PXY r;
    r.tower = f.tower;
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c.push_back(f.c[i] * AlgebraicScalar(Rat(static_cast<long>(i))));
    trim(r);
    return r;
}

// Pseudo-remainder: repeatedly r <- lc(b) r - lc(r) y^k b.
PXY prem(PXY r, const PXY& b) {
    trim(r);
    int db = deg(b);
    while (!r.c.empty() && deg(r) >= db) {
        UniPoly lr = r.c.back();
        int k = deg(r) - db;
        r = sub(mul_px(r, b.c.back()), shift_y(mul_px(b, lr), k));
        trim(r);
    }
    return r;
}

PXY gcd_xy(PXY a, PXY b) {
    trim(a);
    trim(b);
    if (a.c.empty()) return b.c.empty() ? b : pp(b);
    if (b.c.empty()) return pp(a);
    a = pp(a);
    b = pp(b);
    while (!b.c.empty()) {
        PXY r = prem(a, b);
        a = std::move(b);
        if (!r.c.empty()) r = pp(r);
        b = std::move(r);
    }
    return a;  // already primitive and normalized
}

// Exact division in k[x][y] (synthetic division; throws if not exact).
PXY divexact_xy(const PXY& a, const PXY& b) {
    PXY r = a;
    PXY q;
    q.tower = a.tower;
    trim(r);
    int db = deg(b);
    if (deg(r) >= db) q.c.assign(deg(r) - db + 1, UniPoly(a.tower, "x"));
    while (!r.c.empty() && deg(r) >= db) {
        auto [qc, rem] = UniPoly::divmod(r.c.back(), b.c.back());
        if (!rem.is_zero()) throw consistency_error("inexact bivariate division");
        int k = deg(r) - db;
        q.c[k] = qc;
        r = sub(r, shift_y(mul_px(b, qc), k));
        trim(r);
    }
    if (!r.c.empty()) throw consistency_error("inexact bivariate division");
    trim(q);
    return q;
}

AlgebraicScalar eval00(const PXY& f) {
    if (f.c.empty()) return AlgebraicScalar();
    return f.c[0].eval(AlgebraicScalar());
}

// Square-free decomposition in y over k(x) (Musser), primitive representatives.
std::vector<std::pair<PXY, int>> squarefree_xy(const PXY& f0) {
    std::vector<std::pair<PXY, int>> out;
    PXY f = pp(f0);
    if (deg(f) < 1) return out;
    PXY a = gcd_xy(f, deriv_y(f));
    if (deg(a) == 0) {
        out.push_back({f, 1});
        return out;
    }
    PXY b = divexact_xy(f, a);
    b = pp(b);
    int i = 1;
    while (deg(b) > 0) {
        PXY c = gcd_xy(a, b);
        PXY fi = divexact_xy(b, c);
        fi = pp(fi);
        if (deg(fi) > 0) out.push_back({fi, i});
        a = divexact_xy(a, c);
        b = std::move(c);
        ++i;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Base-case detection

std::optional<BaseCase> detect_base_case(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("base-case test on the zero polynomial");
    if (f.min_y_exp() < 0)
        throw precondition_error("base-case test needs f in k[x^-1,x,y]");
    Exp M = -f.min_x_exp();
    LaurentPoly F = f.times_monomial(M, 0, AlgebraicScalar(Rat(1))).with_ring(Ring::poly);
    Exp m = F.min_y_exp();
    if (!F.coeff(0, m).is_zero()) return BaseCase{BaseCase::Kind::monomial, M, m, 0};
    PXY P = from_laurent(F);
    auto parts = squarefree_xy(P);
    const PXY* G = nullptr;
    int mult = 0;
    for (const auto& [g, i] : parts) {
        if (eval00(g).is_zero()) {
            if (G) return std::nullopt;  // two branches through the origin
            G = &g;
            mult = i;
        }
    }
    if (!G) return std::nullopt;
    if (mult != height(f)) return std::nullopt;
    // dG/dy(0,0) != 0: the branch is smooth and transverse to x = 0
    if (G->c.size() < 2 || G->c[1].eval(AlgebraicScalar()).is_zero()) return std::nullopt;
    if (G->c[0].is_zero()) return std::nullopt;  // y | G: handled by the monomial case
    // q = x-valuation of G(x,0)
    Exp qv = 0;
    for (const auto& coef : G->c[0].coeffs()) {
        if (!coef.is_zero()) break;
        ++qv;
    }
    return BaseCase{BaseCase::Kind::smooth_branch, M, static_cast<Exp>(mult), qv};
}

// ---------------------------------------------------------------------------
// Tree construction

namespace {

constexpr int kDepthLimit = 64;

std::pair<AlgebraicScalar, TowerPtr> branch_root(const TowerPtr& tower, const UniPoly& factor) {
    if (factor.degree() == 1) return {-factor[0], tower ? tower : FieldTower::rationals()};
    TowerPtr ext = adjoin_root(tower, factor);
    return {ext->generator(), ext};
}

struct TreeBuilder {
    int next_id = 0;

    std::unique_ptr<NewtonTreeNode> local_node(const LaurentPoly& f, int depth) {
        auto node = std::make_unique<NewtonTreeNode>();
        node->id = next_id++;
        node->depth = depth;
        node->poly = f;
        node->polygon = polygon_local(f);
        node->base = detect_base_case(f);
        if (node->base) return node;
        if (depth >= kDepthLimit)
            throw consistency_error(
                "Newton algorithm depth bound exceeded: non-termination guard fired on " +
                f.to_string());
        auto [vx, vy] = next_var_names(f);
        for (size_t fi = 0; fi < node->polygon.faces.size(); ++fi) {
            const Face& face = node->polygon.faces[fi];
            if (face.dim != 1) continue;
            QuasiHomFactorization qh = quasi_hom_factor(face_polynomial(f, face), face);
            for (const auto& br : qh.branches) {
                auto [mu, tw] = branch_root(f.tower(), br.factor);
                LaurentPoly child = newton_map_local(f.lifted(tw), face.p, face.q, mu, vx, vy);
                NewtonTreeEdge edge;
                edge.face_index = fi;
                edge.at_infinity = false;
                edge.p = face.p;
                edge.q = face.q;
                edge.branch_factor = br.factor;
                edge.multiplicity = br.multiplicity;
                edge.degree = br.degree;
                edge.mu = mu;
                edge.child = local_node(child, depth + 1);
                node->children.push_back(std::move(edge));
            }
        }
        return node;
    }

    std::unique_ptr<NewtonTreeNode> infinity_node(const LaurentPoly& f) {
        auto node = std::make_unique<NewtonTreeNode>();
        node->id = next_id++;
        node->depth = 0;
        node->poly = f;
        node->polygon = polygon_tilde(f);
        for (size_t fi = 0; fi < node->polygon.faces.size(); ++fi) {
            const Face& face = node->polygon.faces[fi];
            if (face.dim != 1) continue;
            if (face.p <= 0 && face.q <= 0) continue;  // not visible from Omega
            std::vector<Face> directions{face};
            if (face.segment_face && face.p * face.q < 0) {
                Face flipped = face;
                flipped.p = -face.p;
                flipped.q = -face.q;
                flipped.N = -face.N;
                flipped.tag = face.tag == FaceTag::inf_inf_zero ? FaceTag::inf_zero_inf
                                                                : FaceTag::inf_inf_zero;
                directions.push_back(flipped);
            }
            for (const Face& dir : directions) {
                QuasiHomFactorization qh = quasi_hom_factor(face_polynomial(f, dir), dir);
                for (const auto& br : qh.branches) {
                    auto [mu, tw] = branch_root(f.tower(), br.factor);
                    LaurentPoly child =
                        newton_map_infinity(f.lifted(tw), dir.p, dir.q, mu, "v", "w");
                    NewtonTreeEdge edge;
                    edge.face_index = fi;
                    edge.at_infinity = true;
                    edge.p = dir.p;
                    edge.q = dir.q;
                    edge.branch_factor = br.factor;
                    edge.multiplicity = br.multiplicity;
                    edge.degree = br.degree;
                    edge.mu = mu;
                    edge.child = local_node(child, 1);
                    node->children.push_back(std::move(edge));
                }
            }
        }
        return node;
    }
};

}  // namespace

NewtonTree newton_algorithm_local(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("Newton algorithm of the zero polynomial");
    if (f.min_y_exp() < 0)
        throw precondition_error("Newton algorithm needs f in k[x^-1,x,y]");
    TreeBuilder b;
    NewtonTree t;
    t.root = b.local_node(f, 0);
    t.at_infinity = false;
    t.node_count = b.next_id;
    return t;
}

NewtonTree newton_algorithm_infinity(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("Newton algorithm of the zero polynomial");
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("Newton algorithm at infinity needs f in k[x,y]");
    TreeBuilder b;
    NewtonTree t;
    t.root = b.infinity_node(f);
    t.at_infinity = true;
    t.node_count = b.next_id;
    return t;
}

// ---------------------------------------------------------------------------
// Dicritical faces and non-generic values

std::vector<DicriticalFace> dicritical_faces(const LaurentPoly& f, DicriticalScope scope) {
    std::vector<DicriticalFace> out;
    if (f.is_zero()) return out;
    if (scope == DicriticalScope::local) {
        if (f.min_x_exp() >= 0) return out;  // f in k[x,y]: no local dicritical face
        NewtonPolygon poly = polygon_local(f, /*add_origin=*/true);
        for (const auto& face : poly.faces) {
            if (face.dim != 1 || !face.contains_origin()) continue;
            LatticePoint other = face.v0 == LatticePoint{0, 0} ? face.v1 : face.v0;
            Exp g = std::gcd(other.first < 0 ? -other.first : other.first,
                             other.second < 0 ? -other.second : other.second);
            LatticePoint d{other.first / g, other.second / g};
            std::vector<AlgebraicScalar> coeffs;
            for (Exp t = 0; t <= g; ++t) coeffs.push_back(f.coeff(t * d.first, t * d.second));
            UniPoly P(f.tower(), "s", std::move(coeffs));
            bool smooth = face.p == 1;  // line a + q b = 0
            out.push_back({face, P, smooth});
        }
        return out;
    }
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("dicritical faces at infinity need f in k[x,y]");
    NewtonPolygon poly = polygon_infinity(f);
    for (const auto& face : poly.faces) {
        if (face.dim != 1 || !face.contains_origin()) continue;
        LatticePoint other = face.v0 == LatticePoint{0, 0} ? face.v1 : face.v0;
        Exp g = std::gcd(other.first < 0 ? -other.first : other.first,
                         other.second < 0 ? -other.second : other.second);
        LatticePoint d{other.first / g, other.second / g};
        std::vector<AlgebraicScalar> coeffs;
        for (Exp t = 0; t <= g; ++t) coeffs.push_back(f.coeff(t * d.first, t * d.second));
        UniPoly P(f.tower(), "s", std::move(coeffs));
        bool smooth = false;
        if (face.tag == FaceTag::inf_zero_inf) smooth = face.q == 1;
        if (face.tag == FaceTag::inf_inf_zero) smooth = face.p == 1;
        out.push_back({face, P, smooth});
    }
    return out;
}

std::vector<AlgebraicScalar> nongeneric_values(const LaurentPoly& f, DicriticalScope scope) {
    std::vector<AlgebraicScalar> out;
    for (const auto& dic : dicritical_faces(f, scope)) {
        UniPoly D = face_discriminant(dic.P, "c");
        if (D.degree() >= 1) {
            Factorization fac = factor_irreducible(D);
            for (const auto& fc : fac.factors) {
                auto [root, tw] = branch_root(f.tower(), fc.factor);
                (void)tw;
                bool dup = false;
                for (const auto& v : out)
                    if (v.level() == root.level() && v == root) dup = true;
                if (!dup) out.push_back(root);
            }
        }
        if (!dic.smooth) {
            AlgebraicScalar c0 = f.coeff(0, 0);
            bool dup = false;
            for (const auto& v : out)
                if (v.level() == c0.level() && v == c0) dup = true;
            if (!dup) out.push_back(c0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Norms down to Q and the Newton bifurcation set

UniPoly norm_to_rationals(const UniPoly& p0) {
    UniPoly p = p0;
    TowerPtr tower = p.tower() ? p.tower() : FieldTower::rationals();
    while (tower->height() > 0) {
        int L = tower->height();
        const UniPoly& m = tower->level(L).minpoly;
        UniPoly mt(tower, "@t", m.coeffs());
        int D = m.degree() * std::max(p.degree(), 0);
        std::vector<AlgebraicScalar> xs, ys;
        TowerPtr parent = tower->parent() ? tower->parent() : FieldTower::rationals();
        for (int i = 0; i <= D; ++i) {
            AlgebraicScalar s0{Rat(i)};
            UniPoly B(tower, "@t");
            AlgebraicScalar power{Rat(1)};
            for (int j = 0; j <= p.degree(); ++j) {
                B = B + detail::generator_to_var(p[j], L, tower, "@t") * power;
                power *= s0;
            }
            AlgebraicScalar val = B.is_zero() ? AlgebraicScalar() : resultant(mt, B);
            if (val.level() >= L) throw consistency_error("norm failed to descend");
            xs.push_back(s0.lifted(parent));
            ys.push_back(val.lifted(parent));
        }
        p = detail::interpolate(parent, p0.var(), xs, ys);
        tower = parent;
    }
    return p;
}

UniPoly minimal_polynomial(const AlgebraicScalar& a, const std::string& var) {
    TowerPtr tower = a.tower() ? a.tower() : FieldTower::rationals();
    UniPoly lin(tower, var, {-a, AlgebraicScalar(Rat(1))});
    UniPoly N = norm_to_rationals(lin);
    auto parts = squarefree_decomposition(N);
    if (parts.size() != 1)
        throw consistency_error("norm of a linear polynomial is not a prime power");
    return parts[0].factor.monic();
}

void sort_and_merge_orbits(std::vector<ValueOrbit>& orbits) {
    std::sort(orbits.begin(), orbits.end(), [](const ValueOrbit& a, const ValueOrbit& b) {
        return UniPoly::compare(a.minpoly, b.minpoly) < 0;
    });
    std::vector<ValueOrbit> merged;
    for (auto& o : orbits) {
        if (!merged.empty() && merged.back().minpoly == o.minpoly) {
            auto& prov = merged.back().provenance;
            prov.insert(prov.end(), o.provenance.begin(), o.provenance.end());
        } else {
            merged.push_back(std::move(o));
        }
    }
    for (auto& o : merged) {
        std::sort(o.provenance.begin(), o.provenance.end());
        o.provenance.erase(std::unique(o.provenance.begin(), o.provenance.end()),
                           o.provenance.end());
    }
    orbits = std::move(merged);
}

namespace {

void collect_node_orbits(const NewtonTreeNode& node, bool is_root_at_infinity,
                         std::vector<ValueOrbit>& out) {
    if (!is_root_at_infinity) {
        for (const auto& v : nongeneric_values(node.poly, DicriticalScope::local))
            out.push_back({minimal_polynomial(v), {"local-dicritical"}});
    }
    for (const auto& edge : node.children)
        collect_node_orbits(*edge.child, false, out);
}

}  // namespace

std::vector<ValueOrbit> tree_nongeneric_orbits(const NewtonTree& tree) {
    std::vector<ValueOrbit> out;
    if (tree.root) collect_node_orbits(*tree.root, tree.at_infinity, out);
    sort_and_merge_orbits(out);
    return out;
}

std::vector<ValueOrbit> newton_bifurcation_set(const LaurentPoly& f) {
    if (f.is_zero() || f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("Newton bifurcation set needs f in k[x,y]");
    std::vector<ValueOrbit> orbits;
    try {
        for (const auto& v : critical_values(f))
            orbits.push_back({minimal_polynomial(v), {"discriminant"}});
    } catch (const precondition_error&) {
        // Non-isolated singularities: the discriminant is outside the elimination
        // oracle's reach; the Newton non-generic values are still well defined.
    }
    for (const auto& v : nongeneric_values(f, DicriticalScope::infinity))
        orbits.push_back({minimal_polynomial(v), {"infinity-dicritical"}});
    NewtonTree tree = newton_algorithm_infinity(f);
    std::vector<ValueOrbit> local = tree_nongeneric_orbits(tree);
    orbits.insert(orbits.end(), local.begin(), local.end());
    sort_and_merge_orbits(orbits);
    return orbits;
}

}  // namespace newton
