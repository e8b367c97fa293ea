#pragma once

#include <optional>
#include <string>
#include <vector>

#include "newton/laurent.hpp"

namespace newton {

enum class PolygonKind { local, at_infinity, global, tilde };

// Normal classification of a 1-face by its supporting direction, or position
// classification of a vertex.
enum class FaceTag {
    local,          // staircase face (inner normal p,q >= 1) or plain local vertex
    inf_inf,        // exterior normal p>0, q>0
    inf_zero_inf,   // exterior normal p<0, q>0   (N_{0,infinity})
    inf_inf_zero,   // exterior normal p>0, q<0   (N_{infinity,0})
    horizontal,     // exterior normal (0,1), or the local horizontal vertex gamma_h
    vertical,       // exterior normal (1,0), or the local vertical vertex gamma_v
    axis,           // face contained in a coordinate axis
    origin,         // face containing the origin
    plain,          // anything else (e.g. lower hull edges invisible from Omega)
};

struct Cone {
    enum class Kind { empty, ray, open2d, halfopen2d, line, halfplane };
    Kind kind = Kind::empty;
    // ray: w1;  open2d: w1,w2 with cross(w1,w2)>0;  halfopen2d: closed ray w1 + open
    // wedge toward w2;  line: +-w1;  halfplane: {x : cross(w1,x)>0}.
    LatticePoint w1{0, 0}, w2{0, 0};
    static Cone empty_cone() { return {}; }
    static Cone ray(LatticePoint w) { return {Kind::ray, w, {0, 0}}; }
    static Cone open2d(LatticePoint a, LatticePoint b) { return {Kind::open2d, a, b}; }
    static Cone halfopen2d(LatticePoint a, LatticePoint b) { return {Kind::halfopen2d, a, b}; }
    static Cone line(LatticePoint w) { return {Kind::line, w, {0, 0}}; }
    static Cone halfplane(LatticePoint w) { return {Kind::halfplane, w, {0, 0}}; }
};

struct Face {
    int dim = 0;
    LatticePoint v0{0, 0}, v1{0, 0};  // v1 == v0 for vertices
    // 1-faces: primitive supporting direction and value (p a + q b = N on the face).
    // Local polygons store the inner normal (p,q >= 1); the others the exterior one.
    Exp p = 0, q = 0, N = 0;
    bool segment_face = false;  // 1-face of a degenerate (segment) hull
    // Dual cone generators for vertices: sector from gen1 to gen2 (ccw, < 180 deg);
    // for endpoints of a segment hull the cone is the open half-plane {x . hint > 0}.
    LatticePoint gen1{0, 0}, gen2{0, 0};
    bool halfplane_cone = false;
    LatticePoint hint{0, 0};
    FaceTag tag = FaceTag::plain;

    bool contains_origin() const {
        if (dim == 0) return v0 == LatticePoint{0, 0};
        if (v0 == LatticePoint{0, 0} || v1 == LatticePoint{0, 0}) return true;
        // N == 0 puts the supporting line through the origin; the origin lies on the
        // segment iff the endpoints sit on opposite sides of it along the line.
        return N == 0 && v0.first * v1.first + v0.second * v1.second <= 0;
    }
    bool on_x_axis() const { return v0.second == 0 && v1.second == 0; }
    bool on_y_axis() const { return v0.first == 0 && v1.first == 0; }
};

struct NewtonPolygon {
    PolygonKind kind = PolygonKind::local;
    std::vector<Face> faces;  // chain order: vertex, edge, vertex, ..., vertex
    std::vector<LatticePoint> support;
    bool single_point = false;
    bool segment = false;

    std::vector<const Face*> one_faces() const;
    std::vector<const Face*> vertices() const;
    const Face* gamma_h() const;  // local polygons: last vertex
    const Face* gamma_v() const;  // local polygons: first vertex
};

NewtonPolygon polygon_local(const LaurentPoly& f, bool add_origin = false);
NewtonPolygon polygon_global(const LaurentPoly& f);
NewtonPolygon polygon_infinity(const LaurentPoly& f);
NewtonPolygon polygon_tilde(const LaurentPoly& f);

Cone dual_cone(const Face& face, const NewtonPolygon& polygon);
// min (local) or max (global / at infinity) of pa+qb over the polygon's support.
Exp m_value(const NewtonPolygon& polygon, Exp p, Exp q);

LaurentPoly face_polynomial(const LaurentPoly& f, const Face& face);

struct QuasiHomBranch {
    UniPoly factor;    // monic irreducible factor of the associated polynomial
    int multiplicity;  // nu
    int degree;        // d = number of conjugate roots sharing this branch
};

struct QuasiHomFactorization {
    AlgebraicScalar unit;
    LatticePoint corner{0, 0};  // exponents (a_gamma, b_gamma) of the monomial prefix
    Exp p = 0, q = 0;           // face direction as stored on the face
    UniPoly assoc;              // associated univariate polynomial; roots are the mu_i
    std::vector<QuasiHomBranch> branches;
    Exp lattice_length = 0;
    int root_count() const {  // r: number of distinct roots over the closure
        int r = 0;
        for (const auto& b : branches) r += b.degree;
        return r;
    }
};

QuasiHomFactorization quasi_hom_factor(const LaurentPoly& face_poly, const Face& face);

// r * S / (s+1) for a 1-face: S = |det(v0,v1)|/2, s = interior lattice points.
Rat area_with_respect_to(const Face& face, const LaurentPoly& f);

int cone_euler(const Cone& c);

enum class Sign { plus, minus };

// Faces of the local polygon belonging to N(f)^eps (Newton-polygon membership used
// by the local motive recursion).
std::vector<const Face*> eps_classification(const LaurentPoly& f, const NewtonPolygon& local,
                                            Sign eps);

// Coefficient of a face class in S_{f,a}^infinity: vertices in {-2,-1,0},
// 1-faces in {0,1}, axis faces in {-1,0}.
int eps_plus(const Face& face, const NewtonPolygon& polygon);

// Coefficient in S_{f,infinity} for faces of N_infinity(f) not containing the origin:
// (-1)^(dim+1) unless the face sits inside an origin-containing face (then 0).
// Axis vertices (a0,0)/(0,b0) carry +1 (their atom is a one-variable power class).
int eps_minus(const Face& face, const NewtonPolygon& polygon);

std::string to_string(const NewtonPolygon& polygon);

}  // namespace newton
