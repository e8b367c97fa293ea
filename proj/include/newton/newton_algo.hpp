#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "newton/lattice.hpp"

namespace newton {

struct BaseCase {
    enum class Kind { monomial, smooth_branch };
    Kind kind;
    Exp M = 0;  // f = u(x,y) x^{-M} y^m  or  u(x,y) x^{-M} (y - mu x^q + g)^m
    Exp m = 0;
    Exp q = 0;  // smooth_branch only
};

// Structural test for the normal forms that stop the Newton algorithm.  Decision
// procedure: strip the x-power, then either F = y^m h with h(0,0) != 0 (monomial) or
// the square-free decomposition of F in y over k(x) exhibits exactly one factor G
// with G(0,0)=0, dG/dy(0,0) != 0, multiplicity equal to the height of f, and every
// other factor a unit at the origin (smooth branch).
std::optional<BaseCase> detect_base_case(const LaurentPoly& f);

struct NewtonTreeNode;

struct NewtonTreeEdge {
    size_t face_index;       // 1-face of the parent polygon
    bool at_infinity;        // infinity map (incl. axis flips) vs local map
    Exp p, q;                // transform direction actually used
    UniPoly branch_factor;   // irreducible factor of the associated polynomial
    int multiplicity;        // nu
    int degree;              // d (conjugate roots collapsed into this branch)
    AlgebraicScalar mu;      // representative root, in the child's tower
    std::unique_ptr<NewtonTreeNode> child;
};

struct NewtonTreeNode {
    int id = 0;
    int depth = 0;
    LaurentPoly poly;
    NewtonPolygon polygon;  // local polygon, or the tilde polygon for the top of an
                            // at-infinity tree
    std::optional<BaseCase> base;
    std::vector<NewtonTreeEdge> children;
    bool is_leaf() const { return base.has_value(); }
};

struct NewtonTree {
    std::unique_ptr<NewtonTreeNode> root;
    bool at_infinity = false;
    int node_count = 0;
};

// Recursive Newton algorithm on f in k[x^-1,x,y]: branches over every 1-face and
// every irreducible factor of its face polynomial until base cases.
NewtonTree newton_algorithm_local(const LaurentPoly& f);

// Newton algorithm at infinity on f in k[x,y]: the top level branches over the
// 1-faces of Nbar(f) \ N(f) (both directions across a degenerate segment), then the
// local algorithm runs below.
NewtonTree newton_algorithm_infinity(const LaurentPoly& f);

enum class DicriticalScope { local, infinity };

struct DicriticalFace {
    Face face;
    UniPoly P;  // face polynomial as P(s) in the monomial s aligned with the face
    bool smooth;
};

std::vector<DicriticalFace> dicritical_faces(const LaurentPoly& f, DicriticalScope scope);

// Newton non-generic values of f for the given scope: all roots of the dicritical
// face discriminants plus, for a non-smooth face, the constant coefficient.  Roots
// live in towers extending f's tower.
std::vector<AlgebraicScalar> nongeneric_values(const LaurentPoly& f, DicriticalScope scope);

// A bifurcation candidate as a Galois orbit over Q, i.e. the monic irreducible
// minimal polynomial (in the variable "c") of the conjugate values.
struct ValueOrbit {
    UniPoly minpoly;
    std::vector<std::string> provenance;
};

// Norm of a polynomial over a tower down to Q[c] (product over all embeddings).
UniPoly norm_to_rationals(const UniPoly& p);
// Monic irreducible minimal polynomial of a scalar over Q.
UniPoly minimal_polynomial(const AlgebraicScalar& a, const std::string& var = "c");

// disc(f) ∪ Newton non-generic values of f and of every transform produced by the
// Newton algorithm at infinity of f, as Galois orbits over Q.
std::vector<ValueOrbit> newton_bifurcation_set(const LaurentPoly& f);

// Union of the non-generic values collected over a tree (as orbits).
std::vector<ValueOrbit> tree_nongeneric_orbits(const NewtonTree& tree);

void sort_and_merge_orbits(std::vector<ValueOrbit>& orbits);

}  // namespace newton
