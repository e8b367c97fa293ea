#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "newton/motives.hpp"

using namespace newton;
using corpus::from_terms;
using corpus::q;

namespace {

// Face data for the smooth-branch face polynomial of f = x^A (y - mu x^qq)^B.
std::pair<LaurentPoly, Face> smooth_face(Exp A, Exp B, Exp qq, long mu) {
    auto lin = from_terms({{0, 1, 1}}, Ring::x_laurent) - from_terms({{qq, 0, mu}});
    auto f = lin.pow(static_cast<int>(B)).times_monomial(A, 0, q(1));
    auto poly = polygon_local(f);
    auto ones = poly.one_faces();
    REQUIRE(ones.size() == 1);
    return {face_polynomial(f, *ones[0]), *ones[0]};
}

}  // namespace

TEST_CASE("euler realization of the worked face classes") {
    // y(x^2 y + 1)^3 and x^2(xy+1)^4 from example 1, and 8 v^-2 w^3 + 5 v^-1
    auto f = corpus::example1() - q(5);
    auto tilde = polygon_tilde(f);
    for (const auto& face : tilde.faces) {
        if (face.dim != 1) continue;
        if (face.p == -1 && face.q == 2) {
            auto atom = MotiveAtom::face(face_polynomial(f, face), Sign::minus, face);
            CHECK(atom.chi_fiber == -2);
        }
        if (face.p == 1 && face.q == -1) {
            auto atom = MotiveAtom::face(face_polynomial(f, face), Sign::minus, face);
            CHECK(atom.chi_fiber == -2);
        }
    }
    auto f1 = corpus::example1_f1();
    auto loc = polygon_local(f1);
    auto ones = loc.one_faces();
    REQUIRE(ones.size() == 1);
    auto atom = MotiveAtom::face(face_polynomial(f1, *ones[0]), Sign::minus, *ones[0]);
    CHECK(atom.chi_fiber == -3);

    CHECK(MotiveAtom::power(-2).chi_fiber == 2);
    CHECK(MotiveAtom::monomial(6, 4).chi_fiber == 0);
    MotiveExpr e;
    e.add(MotiveAtom::power(-2), LPoly(1));
    e.add(MotiveAtom::monomial(6, 4), LPoly(-1));
    CHECK(euler_realization(e) == 2);
}

TEST_CASE("normalize: curve class becomes a torus monomial class (seq3)") {
    MotiveExpr e;
    e.add(MotiveAtom::curve(-3, 2, 1, q(5)), LPoly(1));
    MotiveExpr n = normalize(e);
    MotiveExpr expect;
    expect.add(MotiveAtom::monomial(-3, 2), LPoly(1));
    CHECK(n == expect);
    CHECK(euler_realization(e) == euler_realization(n));
}

TEST_CASE("normalize: seq1+seq2 chain cancels the base-case combination") {
    // [x^{-M+mq}] + [x^{-M}(y-mu x^q)^m on the complement] - [x^{-M} y^m] -> 0
    Exp M = -1, m = 2, qq = 1;  // -M + m q = 3
    auto [fp, face] = smooth_face(-M, m, qq, 3);
    MotiveExpr e;
    e.add(MotiveAtom::power(-M + m * qq), LPoly(1));
    e.add(MotiveAtom::face(fp, Sign::plus, face), LPoly(1));
    e.add(MotiveAtom::monomial(-M, m), LPoly(-1));
    CHECK(euler_realization(e) == 0);
    MotiveExpr n = normalize(e);
    CHECK(n.is_zero());

    // idempotence on an already canonical expression
    MotiveExpr c;
    c.add(MotiveAtom::power(2), LPoly(1));
    c.add(MotiveAtom::monomial(1, 1), LPoly::L_power(1, -1));
    CHECK(normalize(c) == c);
}

TEST_CASE("normalize preserves the Euler realization on rewrite instances") {
    for (long mu : {1L, 2L, -3L}) {
        for (Exp M : {-2L, -1L, 0L, 3L}) {
            Exp m = 2, qq = 2;
            if (M + 0 == 0 && false) continue;
            if (-M + m * qq == 0) continue;
            auto [fp, face] = smooth_face(-M, m, qq, mu);
            MotiveExpr e;
            e.add(MotiveAtom::power(-M + m * qq), LPoly(1));
            e.add(MotiveAtom::face(fp, Sign::plus, face), LPoly(1));
            e.add(MotiveAtom::curve(-M, m, qq, q(mu)), LPoly(-1));
            MotiveExpr n = normalize(e);
            CHECK(euler_realization(e) == euler_realization(n));
            CHECK(n.is_zero());  // the full eq1 identity collapses
        }
    }
}

TEST_CASE("cone series closed forms and limits") {
    LinearForm phi{1, 1}, eta{2, 1};
    // ray
    auto ray = cone_series(phi, eta, Cone::ray({2, 3}));
    REQUIRE(ray.terms.size() == 1);
    CHECK(ray.terms[0].e == -7);
    CHECK(ray.terms[0].a == 5);
    REQUIRE(ray.terms[0].denom.size() == 1);
    CHECK(limit_T_infinity(ray) == LPoly(-1));
    // open 2d
    auto open2 = cone_series(phi, eta, Cone::open2d({1, 0}, {1, 2}));
    CHECK(limit_T_infinity(open2) == LPoly(1));
    // half-open
    auto half = cone_series(phi, eta, Cone::halfopen2d({1, 0}, {1, 2}));
    CHECK(limit_T_infinity(half) == LPoly(0));
    CHECK(limit_T_infinity(half).is_zero());
}

TEST_CASE("parallelepiped point count equals |det|") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<Exp> d(-4, 4);
    int done = 0;
    while (done < 40) {
        LatticePoint w1{d(rng), d(rng)}, w2{d(rng), d(rng)};
        Exp det = w1.first * w2.second - w1.second * w2.first;
        if (det == 0) continue;
        auto pts = parallelepiped_points(w1, w2);
        CHECK(static_cast<Exp>(pts.size()) == (det < 0 ? -det : det));
        ++done;
    }
}

TEST_CASE("property: limit of cone_series equals cone_euler") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<Exp> d(0, 5);
    auto gcd2 = [](Exp a, Exp b) {
        while (b) {
            Exp t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    };
    int done = 0;
    while (done < 60) {
        LatticePoint w1{d(rng), d(rng)}, w2{d(rng), d(rng)};
        if (w1 == LatticePoint{0, 0} || w2 == LatticePoint{0, 0}) continue;
        Exp g1 = gcd2(w1.first, w1.second), g2 = gcd2(w2.first, w2.second);
        w1 = {w1.first / g1, w1.second / g1};
        w2 = {w2.first / g2, w2.second / g2};
        LinearForm phi{1 + d(rng), 1 + d(rng)};
        LinearForm eta{d(rng), d(rng)};
        auto ok = [&](LatticePoint w) {
            return phi.first * w.first + phi.second * w.second > 0 &&
                   eta.first * w.first + eta.second * w.second >= 0;
        };
        if (!ok(w1) || !ok(w2)) continue;
        Cone c;
        switch (done % 3) {
            case 0: c = Cone::ray(w1); break;
            case 1:
                if (w1.first * w2.second == w1.second * w2.first) continue;
                c = Cone::open2d(w1, w2);
                break;
            default:
                if (w1.first * w2.second == w1.second * w2.first) continue;
                c = Cone::halfopen2d(w1, w2);
                break;
        }
        CHECK(limit_T_infinity(cone_series(phi, eta, c)) == LPoly(cone_euler(c)));
        ++done;
    }
}
