#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "newton/lattice.hpp"

using namespace newton;
using corpus::from_terms;
using corpus::q;

namespace {

LaurentPoly example1_f2(long c) {
    // f2 - c with f2 the transform of example 1 along gamma_2^(0)
    auto f = corpus::example1();
    auto f2 = newton_map_infinity(f, 1, -1, q(-1), "v", "w");
    return f2 - q(c);
}

const Face* find_edge(const NewtonPolygon& poly, Exp p, Exp qq, Exp N) {
    for (const auto& f : poly.faces)
        if (f.dim == 1 && f.p == p && f.q == qq && f.N == N) return &f;
    return nullptr;
}

const Face* find_vertex(const NewtonPolygon& poly, Exp a, Exp b) {
    for (const auto& f : poly.faces)
        if (f.dim == 0 && f.v0 == LatticePoint{a, b}) return &f;
    return nullptr;
}

bool cone_contains(const Cone& c, LatticePoint d) {
    auto cross = [](LatticePoint a, LatticePoint b) {
        return a.first * b.second - a.second * b.first;
    };
    switch (c.kind) {
        case Cone::Kind::ray:
            return cross(c.w1, d) == 0 && c.w1.first * d.first + c.w1.second * d.second > 0;
        case Cone::Kind::open2d: return cross(c.w1, d) > 0 && cross(d, c.w2) > 0;
        case Cone::Kind::line: return cross(c.w1, d) == 0;
        case Cone::Kind::halfplane: return cross(c.w1, d) > 0;
        default: return false;
    }
}

}  // namespace

TEST_CASE("polygon_local: f2 - c for generic c has one face on 2a+b=0") {
    auto g = example1_f2(5);
    auto poly = polygon_local(g);
    auto ones = poly.one_faces();
    REQUIRE(ones.size() == 1);
    CHECK(ones[0]->p == 2);
    CHECK(ones[0]->q == 1);
    CHECK(ones[0]->N == 0);
    CHECK(ones[0]->v0 == LatticePoint{-2, 4});
    CHECK(ones[0]->v1 == LatticePoint{0, 0});
}

TEST_CASE("polygon_local: monomial is a single vertex") {
    auto poly = polygon_local(from_terms({{3, 2, 7}}));
    CHECK(poly.single_point);
    CHECK(poly.one_faces().empty());
    REQUIRE(poly.vertices().size() == 1);
    CHECK(poly.gamma_h() == poly.gamma_v());
}

TEST_CASE("polygon_local: f2 - 2 has faces on 2a+b=0 and a+b=1") {
    auto g = example1_f2(2);
    auto poly = polygon_local(g);
    auto ones = poly.one_faces();
    REQUIRE(ones.size() == 2);
    CHECK(find_edge(poly, 2, 1, 0) != nullptr);
    CHECK(find_edge(poly, 1, 1, 1) != nullptr);
}

TEST_CASE("global/infinity polygons of example 1") {
    auto f = corpus::example1() - q(5);  // generic c, f(0,0)-c = -4 != 0
    auto tilde = polygon_tilde(f);
    // exactly two one-dimensional faces away from N(f): -a+2b=2 and a-b=2
    std::vector<const Face*> omega_edges;
    for (const auto& fc : tilde.faces)
        if (fc.dim == 1 && !(fc.p <= 0 && fc.q <= 0)) omega_edges.push_back(&fc);
    REQUIRE(omega_edges.size() == 2);
    CHECK(find_edge(tilde, -1, 2, 2) != nullptr);
    CHECK(find_edge(tilde, 1, -1, 2) != nullptr);

    // f(0,0) != 0 => the global polygon and the polygon at infinity share faces
    auto global = polygon_global(f);
    auto infin = polygon_infinity(f);
    for (const auto& fc : infin.faces) {
        if (fc.dim == 0) {
            CHECK(find_vertex(global, fc.v0.first, fc.v0.second) != nullptr);
        } else {
            CHECK(find_edge(global, fc.p, fc.q, fc.N) != nullptr);
        }
    }
}

TEST_CASE("Broughton global polygon is a segment") {
    auto f = corpus::broughton();
    auto g = polygon_global(f);
    CHECK(g.segment);
    auto ones = g.one_faces();
    REQUIRE(ones.size() == 1);
    CHECK(ones[0]->v0 == LatticePoint{1, 0});
    CHECK(ones[0]->v1 == LatticePoint{2, 1});
    Cone c = dual_cone(*ones[0], g);
    CHECK(c.kind == Cone::Kind::line);
    CHECK((c.w1 == LatticePoint{1, -1} || c.w1 == LatticePoint{-1, 1}));
}

TEST_CASE("dual cones form a fan and m_value is attained on the dual face") {
    auto f = corpus::example1() - q(3);
    auto infin = polygon_infinity(f);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<Exp> de(-6, 6);
    int tested = 0;
    while (tested < 60) {
        LatticePoint d{de(rng), de(rng)};
        if (d.first <= 0 && d.second <= 0) continue;
        if (d == LatticePoint{0, 0}) continue;
        Exp m = m_value(infin, d.first, d.second);
        CHECK(m >= 0);  // origin belongs to the diagram
        int holders = 0;
        for (const auto& fc : infin.faces) {
            Cone c = dual_cone(fc, infin);
            if (!cone_contains(c, d)) continue;
            ++holders;
            // the linear form attains its maximum exactly on this face
            CHECK(d.first * fc.v0.first + d.second * fc.v0.second == m);
            CHECK(d.first * fc.v1.first + d.second * fc.v1.second == m);
        }
        CHECK(holders == 1);  // fan property: no overlaps, full cover of Omega
        ++tested;
    }
}

TEST_CASE("face polynomials of example 1 at infinity") {
    auto f = corpus::example1() - q(5);
    auto tilde = polygon_tilde(f);
    const Face* g1 = find_edge(tilde, -1, 2, 2);
    const Face* g2 = find_edge(tilde, 1, -1, 2);
    REQUIRE(g1);
    REQUIRE(g2);
    // y(x^2y+1)^3 = y + 3x^2y^2 + 3x^4y^3 + x^6y^4
    CHECK(face_polynomial(f, *g1) ==
          from_terms({{0, 1, 1}, {2, 2, 3}, {4, 3, 3}, {6, 4, 1}}));
    // x^2(xy+1)^4
    CHECK(face_polynomial(f, *g2) ==
          from_terms({{2, 0, 1}, {3, 1, 4}, {4, 2, 6}, {5, 3, 4}, {6, 4, 1}}));
    const Face* v = find_vertex(tilde, 6, 4);
    REQUIRE(v);
    CHECK(face_polynomial(f, *v) == from_terms({{6, 4, 1}}));
}

TEST_CASE("quasi-homogeneous factorization of the example faces") {
    auto f = corpus::example1() - q(5);
    auto tilde = polygon_tilde(f);
    const Face* g1 = find_edge(tilde, -1, 2, 2);
    auto qh1 = quasi_hom_factor(face_polynomial(f, *g1), *g1);
    REQUIRE(qh1.branches.size() == 1);
    CHECK(qh1.branches[0].multiplicity == 3);
    CHECK(qh1.branches[0].degree == 1);
    CHECK(qh1.branches[0].factor[0] == q(1));  // root mu = -1
    CHECK(qh1.lattice_length == 3);
    CHECK(qh1.root_count() == 1);

    const Face* g2 = find_edge(tilde, 1, -1, 2);
    auto qh2 = quasi_hom_factor(face_polynomial(f, *g2), *g2);
    REQUIRE(qh2.branches.size() == 1);
    CHECK(qh2.branches[0].multiplicity == 4);
    CHECK(qh2.branches[0].factor[0] == q(1));  // root mu = -1
    CHECK(qh2.lattice_length == 4);
}

TEST_CASE("areas with respect to f reproduce the worked values") {
    auto f = corpus::example1() - q(5);
    auto tilde = polygon_tilde(f);
    const Face* g1 = find_edge(tilde, -1, 2, 2);
    const Face* g2 = find_edge(tilde, 1, -1, 2);
    CHECK(area_with_respect_to(*g1, f) == Rat(1));
    CHECK(area_with_respect_to(*g2, f) == Rat(1));
    // face of 8 v^-2 w^3 + 5 v^-1: vertices (-1,0),(-2,3), S=3/2, s=0, r=1
    auto f1 = newton_map_infinity(corpus::example1(), -1, 2, q(-1), "v", "w");
    auto loc = polygon_local(f1);
    const Face* e = find_edge(loc, 3, 1, -3);
    REQUIRE(e);
    CHECK(area_with_respect_to(*e, f1) == Rat(3, 2));
    CHECK_THROWS_AS(area_with_respect_to(*loc.gamma_h(), f1), precondition_error);
}

TEST_CASE("area identity 2 r S / (s+1) = r |N| for quasi-homogeneous faces") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> dmu(1, 5);
    std::uniform_int_distribution<Exp> dab(0, 3);
    for (int iter = 0; iter < 15; ++iter) {
        Exp p = 1 + iter % 3, qq = 1 + (iter / 3) % 3;
        if (std::gcd(p, qq) != 1) continue;
        Exp a = dab(rng), b = dab(rng);
        int nu1 = 1 + iter % 2, nu2 = 1 + (iter / 2) % 2;
        long m1 = dmu(rng), m2 = m1 + dmu(rng);
        // f = x^a y^b (y^p - m1 x^q)^nu1 (y^p - m2 x^q)^nu2
        auto fac1 = from_terms({{0, p, 1}}) - from_terms({{qq, 0, m1}});
        auto fac2 = from_terms({{0, p, 1}}) - from_terms({{qq, 0, m2}});
        auto f = fac1.pow(nu1) * fac2.pow(nu2) *
                 from_terms({{a, b, 1}});
        auto loc = polygon_local(f);
        auto ones = loc.one_faces();
        REQUIRE(ones.size() == 1);
        const Face& e = *ones[0];
        Rat area = area_with_respect_to(e, f);
        Exp N = e.p * e.v0.first + e.q * e.v0.second;
        int r = 2;
        CHECK(2 * area == Rat(r) * Rat(N < 0 ? -N : N));
        // invariant under the lattice swap (a,b) -> (b,a)
        LaurentPoly::TermMap t;
        for (const auto& [ee, c] : f.terms()) t[{ee.second, ee.first}] = c;
        LaurentPoly fs(f.tower(), "x", "y", Ring::poly, std::move(t));
        auto locs = polygon_local(fs);
        REQUIRE(locs.one_faces().size() == 1);
        CHECK(area_with_respect_to(*locs.one_faces()[0], fs) == area);
    }
}

TEST_CASE("cone_euler values") {
    CHECK(cone_euler(Cone::open2d({1, 0}, {0, 1})) == 1);
    CHECK(cone_euler(Cone::ray({2, 3})) == -1);
    CHECK(cone_euler(Cone::halfopen2d({1, 0}, {1, 2})) == 0);
    CHECK(cone_euler(Cone::empty_cone()) == 0);
}

TEST_CASE("eps_classification examples") {
    // N(f2-c)^+ is empty for generic c
    auto g = example1_f2(5);
    auto loc = polygon_local(g);
    CHECK(eps_classification(g, loc, Sign::plus).empty());

    // a 1-face on p a + q b = N with eps N > 0 belongs to N(f)^eps
    auto f = from_terms({{0, 2, 1}, {3, 0, -1}});  // y^2 - x^3, face N = 6 > 0
    auto lf = polygon_local(f);
    auto plus = eps_classification(f, lf, Sign::plus);
    bool has_face = false;
    for (auto* fc : plus)
        if (fc->dim == 1) has_face = true;
    CHECK(has_face);

    // f in k[x,y]: the horizontal face with a >= 0 is excluded from N(f)^-
    auto minus = eps_classification(f, lf, Sign::minus);
    for (auto* fc : minus) CHECK(fc != lf.gamma_h());
}

TEST_CASE("eps_plus on Broughton faces") {
    auto f = corpus::broughton();
    auto g = polygon_global(f);
    const Face* vx = find_vertex(g, 1, 0);
    const Face* vx2y = find_vertex(g, 2, 1);
    auto ones = g.one_faces();
    REQUIRE(vx);
    REQUIRE(vx2y);
    REQUIRE(ones.size() == 1);
    CHECK(eps_plus(*vx, g) == -1);
    CHECK(eps_plus(*vx2y, g) == 0);
    CHECK(eps_plus(*ones[0], g) == 1);
}

TEST_CASE("eps_plus on the tilde polygon of Broughton f - c") {
    auto f = corpus::broughton() - q(7);
    auto tilde = polygon_tilde(f);
    for (const auto& fc : tilde.faces) CHECK(eps_plus(fc, tilde) == 0);
}

TEST_CASE("eps_minus cases") {
    auto f = corpus::broughton();
    auto infin = polygon_infinity(f);
    // 1-face not containing the origin: +1
    const Face* s2 = find_edge(infin, 1, -1, 1);
    REQUIRE(s2);
    CHECK(eps_minus(*s2, infin) == 1);
    // vertex inside the dicritical face: 0
    const Face* v21 = find_vertex(infin, 2, 1);
    REQUIRE(v21);
    CHECK(eps_minus(*v21, infin) == 0);
    // axis vertex: +1
    const Face* v10 = find_vertex(infin, 1, 0);
    REQUIRE(v10);
    CHECK(eps_minus(*v10, infin) == 1);

    // off-axis vertex of example 1 away from any dicritical face: -1
    auto e1 = corpus::example1();
    auto inf1 = polygon_infinity(e1);
    const Face* v64 = find_vertex(inf1, 6, 4);
    REQUIRE(v64);
    CHECK(eps_minus(*v64, inf1) == -1);
    CHECK(eps_minus(*find_vertex(inf1, 0, 1), inf1) == 1);
    CHECK(eps_minus(*find_vertex(inf1, 2, 0), inf1) == 1);
}

TEST_CASE("example 1 has no dicritical face at infinity; Broughton has one") {
    auto inf1 = polygon_infinity(corpus::example1());
    for (const auto& fc : inf1.faces)
        if (fc.dim == 1) CHECK(!fc.contains_origin());
    auto infb = polygon_infinity(corpus::broughton());
    bool found = false;
    for (const auto& fc : infb.faces)
        if (fc.dim == 1 && fc.contains_origin()) found = true;
    CHECK(found);
}
