#include "newton/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace newton {

namespace {

using Vec2 = LatticePoint;

Exp cross(Vec2 a, Vec2 b) { return a.first * b.second - a.second * b.first; }
Exp dot(Vec2 a, Vec2 b) { return a.first * b.first + a.second * b.second; }

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

Vec2 primitive(Vec2 v) {
    Exp g = gcd_exp(v.first, v.second);
    if (g == 0) return v;
    return {v.first / g, v.second / g};
}

bool in_omega(Vec2 v) { return !(v.first <= 0 && v.second <= 0); }

// Full convex hull, counterclockwise, strict turns (no interior edge points).
std::vector<Vec2> convex_hull_ccw(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross({hull[k - 1].first - hull[k - 2].first,
                                hull[k - 1].second - hull[k - 2].second},
                               {pts[i].first - hull[k - 2].first,
                                pts[i].second - hull[k - 2].second}) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {  // upper hull
        while (k >= lower && cross({hull[k - 1].first - hull[k - 2].first,
                                    hull[k - 1].second - hull[k - 2].second},
                                   {pts[i].first - hull[k - 2].first,
                                    pts[i].second - hull[k - 2].second}) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

FaceTag edge_tag(Vec2 n) {
    if (n.first > 0 && n.second > 0) return FaceTag::inf_inf;
    if (n.first < 0 && n.second > 0) return FaceTag::inf_zero_inf;
    if (n.first > 0 && n.second < 0) return FaceTag::inf_inf_zero;
    if (n == Vec2{0, 1}) return FaceTag::horizontal;
    if (n == Vec2{1, 0}) return FaceTag::vertical;
    if (n.first < 0 && n.second < 0) return FaceTag::local;
    return FaceTag::plain;
}

FaceTag vertex_tag(Vec2 v) {
    if (v == Vec2{0, 0}) return FaceTag::origin;
    if (v.first == 0 || v.second == 0) return FaceTag::axis;
    return FaceTag::plain;
}

Face make_vertex(Vec2 v, Vec2 g1, Vec2 g2, FaceTag tag) {
    Face f;
    f.dim = 0;
    f.v0 = f.v1 = v;
    f.gen1 = primitive(g1);
    f.gen2 = primitive(g2);
    f.tag = tag;
    return f;
}

Face make_edge(Vec2 a, Vec2 b, Vec2 n, FaceTag tag) {
    Face f;
    f.dim = 1;
    f.v0 = a;
    f.v1 = b;
    Vec2 pn = primitive(n);
    f.p = pn.first;
    f.q = pn.second;
    f.N = f.p * a.first + f.q * a.second;
    f.tag = tag;
    f.gen1 = f.gen2 = pn;
    return f;
}

// Ordering of exterior normals along the Omega-visible chain: angles descend from
// just under 180 degrees to just above -90.
int chain_bucket(Vec2 n) {
    if (n.first < 0 && n.second > 0) return 0;
    if (n == Vec2{0, 1}) return 1;
    if (n.first > 0 && n.second > 0) return 2;
    if (n == Vec2{1, 0}) return 3;
    if (n.first > 0 && n.second < 0) return 4;
    return 5;  // not on the chain
}

bool chain_normal_less(Vec2 a, Vec2 b) {
    int ba = chain_bucket(a), bb = chain_bucket(b);
    if (ba != bb) return ba < bb;
    return cross(a, b) < 0;  // larger angle first within a bucket
}

struct HullData {
    std::vector<Vec2> verts;           // ccw
    std::vector<Vec2> edge_normals;    // primitive exterior, edge i = (v[i], v[i+1])
};

HullData hull_with_normals(const std::vector<Vec2>& pts) {
    HullData h;
    h.verts = convex_hull_ccw(pts);
    size_t n = h.verts.size();
    if (n < 2) return h;
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = h.verts[i], b = h.verts[(i + 1) % n];
        Vec2 d{b.first - a.first, b.second - a.second};
        h.edge_normals.push_back(primitive({d.second, -d.first}));
        if (n == 2) break;  // segment: single edge
    }
    return h;
}

}  // namespace

std::vector<const Face*> NewtonPolygon::one_faces() const {
    std::vector<const Face*> out;
    for (const auto& f : faces)
        if (f.dim == 1) out.push_back(&f);
    return out;
}

std::vector<const Face*> NewtonPolygon::vertices() const {
    std::vector<const Face*> out;
    for (const auto& f : faces)
        if (f.dim == 0) out.push_back(&f);
    return out;
}

const Face* NewtonPolygon::gamma_h() const {
    const Face* last = nullptr;
    for (const auto& f : faces)
        if (f.dim == 0) last = &f;
    return last;
}

const Face* NewtonPolygon::gamma_v() const {
    for (const auto& f : faces)
        if (f.dim == 0) return &f;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Builders

NewtonPolygon polygon_local(const LaurentPoly& f, bool add_origin) {
    if (f.is_zero()) throw precondition_error("Newton polygon of the zero polynomial");
    NewtonPolygon poly;
    poly.kind = PolygonKind::local;
    poly.support = f.support();
    if (add_origin && std::find(poly.support.begin(), poly.support.end(), Vec2{0, 0}) ==
                          poly.support.end())
        poly.support.push_back({0, 0});
    // Pareto-minimal points, then the convex staircase chain.
    std::vector<Vec2> pts = poly.support;
    std::vector<Vec2> pareto;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (q != p && q.first <= p.first && q.second <= p.second) {
                dominated = true;
                break;
            }
        if (!dominated) pareto.push_back(p);
    }
    std::sort(pareto.begin(), pareto.end());
    std::vector<Vec2> chain;
    for (const auto& p : pareto) {
        while (chain.size() >= 2) {
            Vec2 u = chain[chain.size() - 2], v = chain.back();
            Vec2 e1{v.first - u.first, v.second - u.second};
            Vec2 e2{p.first - v.first, p.second - v.second};
            if (cross(e1, e2) <= 0)
                chain.pop_back();
            else
                break;
        }
        chain.push_back(p);
    }
    size_t d = chain.size();
    poly.single_point = d == 1;
    // inner normals of the staircase edges, plus the bounding rays (1,0) and (0,1)
    std::vector<Vec2> normals(d + 1);
    normals[0] = {1, 0};
    normals[d] = {0, 1};
    for (size_t i = 0; i + 1 < d; ++i) {
        Vec2 a = chain[i], b = chain[i + 1];
        normals[i + 1] = primitive({a.second - b.second, b.first - a.first});
    }
    for (size_t i = 0; i < d; ++i) {
        FaceTag tag = FaceTag::local;
        if (i == 0) tag = FaceTag::vertical;
        if (i + 1 == d) tag = FaceTag::horizontal;
        poly.faces.push_back(make_vertex(chain[i], normals[i], normals[i + 1], tag));
        if (i + 1 < d) {
            Face e = make_edge(chain[i], chain[i + 1], normals[i + 1], FaceTag::local);
            poly.faces.push_back(e);
        }
    }
    return poly;
}

namespace {

NewtonPolygon build_from_hull(const std::vector<Vec2>& pts, PolygonKind kind,
                              bool omega_only) {
    NewtonPolygon poly;
    poly.kind = kind;
    poly.support = pts;
    HullData h = hull_with_normals(pts);
    size_t n = h.verts.size();
    if (n == 1) {
        poly.single_point = true;
        poly.faces.push_back(make_vertex(h.verts[0], {0, 0}, {0, 0}, vertex_tag(h.verts[0])));
        return poly;
    }
    if (n == 2) {
        poly.segment = true;
        Vec2 a = h.verts[0], b = h.verts[1];
        if (b < a) std::swap(a, b);  // a0 <= a1, ties by b
        Vec2 d{b.first - a.first, b.second - a.second};
        Vec2 nrm = primitive({d.second, -d.first});
        if (!in_omega(nrm)) nrm = {-nrm.first, -nrm.second};
        Face lo = make_vertex(a, nrm, {-nrm.first, -nrm.second}, vertex_tag(a));
        lo.halfplane_cone = true;
        lo.hint = {-d.first, -d.second};
        Face hi = make_vertex(b, nrm, {-nrm.first, -nrm.second}, vertex_tag(b));
        hi.halfplane_cone = true;
        hi.hint = d;
        Face seg = make_edge(a, b, nrm, edge_tag(nrm));
        seg.segment_face = true;
        poly.faces.push_back(lo);
        poly.faces.push_back(seg);
        poly.faces.push_back(hi);
        return poly;
    }
    // Chain of edges ordered by descending normal angle inside the Omega range,
    // followed (for the full global polygon) by the remaining faces.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return chain_normal_less(h.edge_normals[i], h.edge_normals[j]);
    });
    auto vertex_for = [&](size_t vi) {
        // edges around vertex vi: incoming edge vi-1, outgoing edge vi (ccw)
        size_t prev = (vi + n - 1) % n;
        return make_vertex(h.verts[vi], h.edge_normals[prev], h.edge_normals[vi],
                           vertex_tag(h.verts[vi]));
    };
    std::vector<bool> vertex_done(n, false);
    for (size_t oi : order) {
        Vec2 nrm = h.edge_normals[oi];
        if (omega_only && !in_omega(nrm)) continue;
        size_t a = oi, b = (oi + 1) % n;
        if (!vertex_done[a]) {
            poly.faces.push_back(vertex_for(a));
            vertex_done[a] = true;
        }
        poly.faces.push_back(make_edge(h.verts[a], h.verts[b], nrm, edge_tag(nrm)));
        if (!vertex_done[b]) {
            poly.faces.push_back(vertex_for(b));
            vertex_done[b] = true;
        }
    }
    if (!omega_only) {
        for (size_t i = 0; i < n; ++i)
            if (!vertex_done[i]) {
                poly.faces.push_back(vertex_for(i));
                vertex_done[i] = true;
            }
    }
    return poly;
}

}  // namespace

NewtonPolygon polygon_global(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("Newton polygon of the zero polynomial");
    if (!f.is_zero() && (f.min_x_exp() < 0 || f.min_y_exp() < 0))
        throw precondition_error("global Newton polygon needs f in k[x,y]");
    return build_from_hull(f.support(), PolygonKind::global, false);
}

NewtonPolygon polygon_infinity(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("Newton polygon of the zero polynomial");
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("Newton polygon at infinity needs f in k[x,y]");
    std::vector<Vec2> pts = f.support();
    if (std::find(pts.begin(), pts.end(), Vec2{0, 0}) == pts.end()) pts.push_back({0, 0});
    return build_from_hull(pts, PolygonKind::at_infinity, true);
}

NewtonPolygon polygon_tilde(const LaurentPoly& f) {
    if (f.is_zero()) throw precondition_error("Newton polygon of the zero polynomial");
    if (f.min_x_exp() < 0 || f.min_y_exp() < 0)
        throw precondition_error("tilde Newton polygon needs f in k[x,y]");
    NewtonPolygon g = build_from_hull(f.support(), PolygonKind::global, false);
    g.kind = PolygonKind::tilde;
    if (g.single_point || g.segment) return g;
    // Drop local staircase faces: edges whose exterior normal is strictly negative,
    // and vertices wedged between two such edges (gamma_h and gamma_v survive).
    auto is_local_edge = [](const Face& f2) {
        return f2.dim == 1 && f2.p < 0 && f2.q < 0;
    };
    std::vector<Face> kept;
    for (const auto& face : g.faces) {
        if (face.dim == 1 && is_local_edge(face)) continue;
        if (face.dim == 0 && face.gen1.first < 0 && face.gen1.second < 0 &&
            face.gen2.first < 0 && face.gen2.second < 0)
            continue;
        kept.push_back(face);
    }
    g.faces = std::move(kept);
    return g;
}

// ---------------------------------------------------------------------------

Cone dual_cone(const Face& face, const NewtonPolygon& polygon) {
    if (face.dim == 1) {
        if (face.segment_face) return Cone::line({face.p, face.q});
        return Cone::ray({face.p, face.q});
    }
    if (face.halfplane_cone) return Cone::halfplane({face.hint.second, -face.hint.first});
    if (polygon.single_point && polygon.kind == PolygonKind::local)
        return Cone::open2d({1, 0}, {0, 1});
    if (polygon.single_point)
        throw precondition_error("dual cone of a point polygon is the whole plane");
    return Cone::open2d(face.gen1, face.gen2);
}

Exp m_value(const NewtonPolygon& polygon, Exp p, Exp q) {
    if (p == 0 && q == 0) throw precondition_error("m_value of the zero direction");
    bool first = true;
    Exp best = 0;
    for (const auto& pt : polygon.support) {
        Exp v = p * pt.first + q * pt.second;
        if (first) {
            best = v;
            first = false;
        } else if (polygon.kind == PolygonKind::local ? v < best : v > best) {
            best = v;
        }
    }
    return best;
}

LaurentPoly face_polynomial(const LaurentPoly& f, const Face& face) {
    LaurentPoly::TermMap t;
    if (face.dim == 0) {
        AlgebraicScalar c = f.coeff(face.v0.first, face.v0.second);
        if (!c.is_zero()) t[face.v0] = c;
    } else {
        for (const auto& [e, c] : f.terms()) {
            if (face.p * e.first + face.q * e.second != face.N) continue;
            // on the supporting line; restrict to the segment
            Exp lo = std::min(face.v0.first, face.v1.first);
            Exp hi = std::max(face.v0.first, face.v1.first);
            Exp lo2 = std::min(face.v0.second, face.v1.second);
            Exp hi2 = std::max(face.v0.second, face.v1.second);
            if (e.first < lo || e.first > hi || e.second < lo2 || e.second > hi2) continue;
            t[e] = c;
        }
    }
    return LaurentPoly(f.tower(), f.xvar(), f.yvar(), f.ring(), std::move(t));
}

// ---------------------------------------------------------------------------
// Quasi-homogeneous factorization of a face polynomial

QuasiHomFactorization quasi_hom_factor(const LaurentPoly& face_poly, const Face& face) {
    if (face.dim != 1) throw precondition_error("quasi_hom_factor needs a 1-face");
    if (face_poly.is_zero()) throw precondition_error("empty face polynomial");
    QuasiHomFactorization out;
    out.p = face.p;
    out.q = face.q;
    Vec2 dir{face.v1.first - face.v0.first, face.v1.second - face.v0.second};
    Vec2 step = primitive(dir);
    Exp L = dir.first != 0 ? dir.first / step.first : dir.second / step.second;
    if (L < 0) {
        step = {-step.first, -step.second};
        L = -L;
    }
    out.lattice_length = L;
    // Choose the start endpoint per the factorization shapes: the associated
    // polynomial A is read off so that its reversal has the mu_i as roots for the
    // shapes with reciprocal conventions, or directly for the others.
    bool reversed;
    Vec2 start;
    FaceTag tag = face.tag;
    if (tag == FaceTag::local) {
        // local: c x^a y^b prod (y^p - mu x^q)^nu; start at the high-y endpoint
        start = face.v0.second > face.v1.second ? face.v0 : face.v1;
        reversed = true;
    } else if (tag == FaceTag::inf_inf) {
        // x^a y^b prod (x^q - mu y^p)^nu; start at the high-x endpoint
        start = face.v0.first > face.v1.first ? face.v0 : face.v1;
        reversed = true;
    } else if (tag == FaceTag::inf_zero_inf) {
        // x^a y^b prod (mu x^q y^{-p} - 1)^nu; start at the low-x endpoint
        start = face.v0.first < face.v1.first ? face.v0 : face.v1;
        reversed = true;
    } else if (tag == FaceTag::inf_inf_zero) {
        // x^a y^b prod (x^{-q} y^p - mu)^nu; start at the low-y endpoint
        start = face.v0.second < face.v1.second ? face.v0 : face.v1;
        reversed = false;
    } else if (tag == FaceTag::horizontal) {
        start = face.v0.first < face.v1.first ? face.v0 : face.v1;
        reversed = false;
    } else if (tag == FaceTag::vertical) {
        start = face.v0.second < face.v1.second ? face.v0 : face.v1;
        reversed = false;
    } else {
        throw precondition_error("face direction is not visible from Omega");
    }
    out.corner = {std::min(face.v0.first, face.v1.first),
                  std::min(face.v0.second, face.v1.second)};
    Vec2 s = step;
    // re-orient the step away from the chosen start
    Vec2 end{start.first + s.first * L, start.second + s.second * L};
    if (end != (start == face.v0 ? face.v1 : face.v0)) s = {-s.first, -s.second};
    std::vector<AlgebraicScalar> coeffs;
    for (Exp t = 0; t <= L; ++t) {
        coeffs.push_back(
            face_poly.coeff(start.first + s.first * t, start.second + s.second * t));
    }
    if (reversed) std::reverse(coeffs.begin(), coeffs.end());
    out.assoc = UniPoly(face_poly.tower(), "t", std::move(coeffs));
    if (out.assoc.degree() != L)
        throw consistency_error("face polynomial endpoint has zero coefficient");
    Factorization fac = factor_irreducible(out.assoc);
    out.unit = fac.unit;
    for (auto& fct : fac.factors) {
        if (fct.factor.degree() == 1 && fct.factor[0].is_zero())
            throw consistency_error("face polynomial has a zero root");
        out.branches.push_back(
            {fct.factor, fct.multiplicity, fct.factor.degree()});
    }
    return out;
}

Rat area_with_respect_to(const Face& face, const LaurentPoly& f) {
    if (face.dim != 1) throw precondition_error("area of a zero-dimensional face");
    LaurentPoly fp = face_polynomial(f, face);
    QuasiHomFactorization qh = quasi_hom_factor(fp, face);
    Exp det = face.v0.first * face.v1.second - face.v0.second * face.v1.first;
    Rat S(det < 0 ? -det : det, 2);
    S.canonicalize();
    Exp s = qh.lattice_length - 1;
    Rat r = Rat(qh.root_count()) * S / Rat(s + 1);
    r.canonicalize();
    return r;
}

int cone_euler(const Cone& c) {
    switch (c.kind) {
        case Cone::Kind::open2d: return 1;
        case Cone::Kind::ray: return -1;
        case Cone::Kind::halfopen2d: return 0;
        case Cone::Kind::empty: return 0;
        default: throw precondition_error("Euler characteristic of an unsupported cone kind");
    }
}

// ---------------------------------------------------------------------------
// N(f)^eps membership (local polygons)

namespace {

bool eps_pos(Sign eps, Exp v) { return eps == Sign::plus ? v > 0 : v < 0; }

}  // namespace

std::vector<const Face*> eps_classification(const LaurentPoly& f, const NewtonPolygon& local,
                                            Sign eps) {
    (void)f;
    std::vector<const Face*> out;
    const Face* gh = local.gamma_h();
    for (const auto& face : local.faces) {
        if (face.dim == 1) {
            if (eps_pos(eps, face.N)) out.push_back(&face);
            continue;
        }
        Exp a = face.v0.first, b = face.v0.second;
        if (&face == gh) {
            if (b == 0) {
                if (eps_pos(eps, a)) out.push_back(&face);
            } else {
                Exp m = dot(face.v0, face.gen1);  // the non-(0,1) generator
                if (eps_pos(eps, m)) out.push_back(&face);
            }
            continue;
        }
        if (eps_pos(eps, dot(face.v0, face.gen1)) && eps_pos(eps, dot(face.v0, face.gen2)))
            out.push_back(&face);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact open-cone intersection: cones given as {x : cross(g, x) > 0 for all g}.

namespace {

Vec2 rot90(Vec2 g) { return {-g.second, g.first}; }

struct OpenSector {
    bool empty = true;
    Vec2 lo{0, 0}, hi{0, 0};
};

OpenSector intersect_constraints(const std::vector<Vec2>& gs) {
    auto feasible_strict = [&](Vec2 w) {
        for (const auto& g : gs)
            if (cross(g, w) <= 0) return false;
        return true;
    };
    auto feasible_weak = [&](Vec2 w) {
        for (const auto& g : gs)
            if (cross(g, w) < 0) return false;
        return true;
    };
    for (const auto& glo : gs) {
        for (const auto& ghi : gs) {
            Vec2 lo = glo;
            Vec2 hi{-ghi.first, -ghi.second};
            Exp c = cross(lo, hi);
            if (c < 0) continue;
            Vec2 w = c > 0 ? Vec2{lo.first + hi.first, lo.second + hi.second} : rot90(lo);
            if (!feasible_strict(w)) continue;
            if (!feasible_weak(lo) || !feasible_weak(hi)) continue;
            return {false, primitive(lo), primitive(hi)};
        }
    }
    return {};
}

// Constraint of the half-plane {x . d > 0}.
Vec2 dot_halfplane(Vec2 d) { return {d.second, -d.first}; }

// Per-quadrant contribution to -eps_gamma for a vertex face.
int quadrant_contribution(const Face& face, bool quad_minus_plus) {
    std::vector<Vec2> gs;
    // dual cone
    if (face.halfplane_cone) {
        gs.push_back(dot_halfplane(face.hint));
    } else {
        gs.push_back(face.gen1);
        gs.push_back({-face.gen2.first, -face.gen2.second});
    }
    // H_gamma = {x . v0 < 0}
    gs.push_back(dot_halfplane({-face.v0.first, -face.v0.second}));
    // quadrant
    if (quad_minus_plus) {
        gs.push_back({0, 1});
        gs.push_back({1, 0});
    } else {
        gs.push_back({0, -1});
        gs.push_back({-1, 0});
    }
    OpenSector k = intersect_constraints(gs);
    if (k.empty) return 0;
    Exp d1 = dot(k.lo, face.v0), d2 = dot(k.hi, face.v0);
    return (d1 < 0 && d2 < 0) ? 1 : 0;  // a generator orthogonal to gamma kills it
}

}  // namespace

int eps_plus(const Face& face, const NewtonPolygon& polygon) {
    if (face.dim == 1) {
        if (face.segment_face) return (face.N != 0 && face.p * face.q < 0) ? 1 : 0;
        if (face.N >= 0) return 0;
        return in_omega({face.p, face.q}) ? 1 : 0;
    }
    if (face.contains_origin()) return 0;
    if (polygon.single_point) return 0;
    return -(quadrant_contribution(face, true) + quadrant_contribution(face, false));
}

int eps_minus(const Face& face, const NewtonPolygon& polygon) {
    if (face.contains_origin()) return 0;
    if (face.dim == 0) {
        Exp a = face.v0.first, b = face.v0.second;
        if ((b == 0 && a > 0) || (a == 0 && b > 0)) return 1;  // axis vertex power class
        for (const auto& other : polygon.faces) {
            if (other.dim != 1 || !other.contains_origin()) continue;
            if (other.v0 == face.v0 || other.v1 == face.v0) return 0;
        }
        return -1;
    }
    return 1;
}

std::string to_string(const NewtonPolygon& polygon) {
    std::ostringstream os;
    switch (polygon.kind) {
        case PolygonKind::local: os << "N(f)"; break;
        case PolygonKind::at_infinity: os << "N_inf(f)"; break;
        case PolygonKind::global: os << "Nbar(f)"; break;
        case PolygonKind::tilde: os << "Ntilde(f)"; break;
    }
    os << ":";
    for (const auto& f : polygon.faces) {
        if (f.dim == 0) {
            os << " v(" << f.v0.first << "," << f.v0.second << ")";
        } else {
            os << " e[(" << f.v0.first << "," << f.v0.second << ")-(" << f.v1.first << ","
               << f.v1.second << "); " << f.p << "a+" << f.q << "b=" << f.N << "]";
        }
    }
    return os.str();
}

}  // namespace newton
