#include <doctest.h>

#include <algorithm>

#include "qdpot/oracle.hpp"
#include "qdpot/rational.hpp"
#include "support.hpp"

using namespace qdpot;
using qdtest::rand_cplx;
using qdtest::unit;

namespace {

const Root* find_root(const std::vector<Root>& roots, cplx at) {
    for (const auto& r : roots)
        if (std::abs(r.location - at) < 1e-7) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("poly_roots: forced factorizations") {
    // w^2 + 1
    auto r = poly_roots(Poly({cplx(1.0), cplx(0.0), cplx(1.0)}));
    REQUIRE(r.size() == 2);
    CHECK(find_root(r, cplx(0.0, 1.0)) != nullptr);
    CHECK(find_root(r, cplx(0.0, -1.0)) != nullptr);

    // w^2 - 2w + 1 = (w-1)^2
    auto r2 = poly_roots(Poly({cplx(1.0), cplx(-2.0), cplx(1.0)}));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].multiplicity == 2);
    CHECK(std::abs(r2[0].location - cplx(1.0)) < 1e-7);

    // degree 0: empty, not an error
    CHECK(poly_roots(Poly::constant(3.0)).empty());
}

TEST_CASE("poly_roots: w^3 - w against the evaluation oracle") {
    Poly p({cplx(0.0), cplx(-1.0), cplx(0.0), cplx(1.0)});
    auto r = poly_roots(p);
    REQUIRE(r.size() == 3);
    for (cplx expected : {cplx(0.0), cplx(1.0), cplx(-1.0)}) {
        const Root* got = find_root(r, expected);
        REQUIRE(got != nullptr);
        CHECK(got->multiplicity == 1);
        CHECK(std::abs(p(got->location)) <= 1e-12 * 3.0);
    }
}

TEST_CASE("poly_roots: reconstruction property") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> degd(1, 8);
        int deg = degd(rng);
        std::vector<cplx> c(deg + 1);
        for (auto& v : c) v = rand_cplx(rng, 2.0);
        if (std::abs(c.back()) < 0.1) c.back() += 0.5;
        Poly p{std::vector<cplx>(c)};
        auto roots = poly_roots(p);
        int total = 0;
        for (const auto& r : roots) total += r.multiplicity;
        CHECK(total == p.degree());
        for (int k = 0; k < 32; ++k) {
            cplx z = rand_cplx(rng, 1.5);
            cplx prod = p.lead();
            for (const auto& r : roots)
                for (int m = 0; m < r.multiplicity; ++m) prod *= (z - r.location);
            CHECK(std::abs(prod - p(z)) <= 1e-9 * (1.0 + std::abs(p(z))));
        }
    }
}

TEST_CASE("poly_roots: multiple roots are merged at the cluster tolerance") {
    // (w - 0.5)^3 (w + 2)
    Poly p = Poly::one();
    for (int i = 0; i < 3; ++i) p = p * Poly({cplx(-0.5), cplx(1.0)});
    p = p * Poly({cplx(2.0), cplx(1.0)});
    auto r = poly_roots(p);
    REQUIRE(r.size() == 2);
    const Root* triple = find_root(r, cplx(0.5));
    REQUIRE(triple != nullptr);
    CHECK(triple->multiplicity == 3);
}

TEST_CASE("rational arithmetic: spec fixtures") {
    RationalFn one_over_w(Poly::one(), Poly::variable());

    // derive 1/w = -1/w^2
    RationalFn d = one_over_w.derivative();
    CHECK(std::abs(d(cplx(2.0)) - cplx(-0.25)) < 1e-14);
    CHECK(d.denom().degree() == 2);
    CHECK(d.numer().degree() == 0);

    // compose(1/(1-w), w^2) = 1/(1-w^2)
    RationalFn f(Poly::one(), Poly({cplx(1.0), cplx(-1.0)}));
    RationalFn g(Poly({cplx(0.0), cplx(0.0), cplx(1.0)}));
    RationalFn comp = f.compose(g);
    for (double x : {0.3, -0.45, 0.9}) {
        CHECK(std::abs(comp(cplx(x)) - 1.0 / (1.0 - x * x)) < 1e-12);
    }

    // add(1/(w-2), 1/w) = (2w-2)/(w^2-2w) via the cross-multiplication oracle
    RationalFn a(Poly::one(), Poly({cplx(-2.0), cplx(1.0)}));
    RationalFn sum = a + one_over_w;
    std::mt19937 rng(3);
    for (int k = 0; k < 16; ++k) {
        cplx z = rand_cplx(rng, 3.0);
        if (std::abs(z) < 0.1 || std::abs(z - 2.0) < 0.1) continue;
        cplx expect = (2.0 * z - 2.0) / (z * z - 2.0 * z);
        CHECK(std::abs(sum(z) - expect) < 1e-11 * (1.0 + std::abs(expect)));
    }
    CHECK(sum.numer().degree() == 1);
    CHECK(sum.denom().degree() == 2);
}

TEST_CASE("rational division by zero") {
    RationalFn a = RationalFn::variable();
    CHECK_THROWS_WITH_AS(a / RationalFn(), "zero divisor", error);
}

TEST_CASE("canonicalization removes common factors") {
    // (w-1)(w-3) / (w-1) -> w-3
    Poly num = Poly({cplx(-1.0), cplx(1.0)}) * Poly({cplx(-3.0), cplx(1.0)});
    RationalFn r(num, Poly({cplx(-1.0), cplx(1.0)}));
    CHECK(r.denom().degree() == 0);
    CHECK(r.numer().degree() == 1);
    CHECK(std::abs(r(cplx(0.0)) - cplx(-3.0)) < 1e-12);
}

TEST_CASE("principal_part_at: Taylor-oracle fixture") {
    // f = 1/((w-0.5)^2 (w+2)); the expansion of 1/(w+2) at 0.5 is
    // 0.4 - 0.16 (w - 0.5) + ..., so the tail is 0.4 (w-.5)^-2 - 0.16 (w-.5)^-1.
    Poly den = Poly({cplx(-0.5), cplx(1.0)}) * Poly({cplx(-0.5), cplx(1.0)}) *
               Poly({cplx(2.0), cplx(1.0)});
    RationalFn f(Poly::one(), den);
    auto pp = principal_part_at(f, cplx(0.5));
    REQUIRE(pp.order() == 2);
    CHECK(std::abs(pp.coeffs[1] - cplx(0.4)) < 1e-12);
    CHECK(std::abs(pp.coeffs[0] - cplx(-0.16)) < 1e-12);

    // f - pp is bounded near the pole
    for (int k = 0; k < 16; ++k) {
        cplx w = cplx(0.5) + 1e-4 * unit(qdtest::two_pi * k / 16);
        CHECK(std::abs(f(w) - pp(w)) < 1.0);
    }
}

TEST_CASE("principal_part_at: trivial cases") {
    RationalFn f(Poly::one(), Poly::variable());
    auto pp = principal_part_at(f, cplx(0.0));
    REQUIRE(pp.order() == 1);
    CHECK(std::abs(pp.coeffs[0] - cplx(1.0)) < 1e-14);

    RationalFn g(Poly({cplx(0.0), cplx(0.0), cplx(1.0)}));
    CHECK(principal_part_at(g, cplx(1.0)).empty());
}

TEST_CASE("principal_part_at: sub-tolerance pole pairs merge") {
    // Poles 5e-9 apart are below tol::cluster: the root finder reports one
    // cluster of multiplicity 2, and the principal part comes out order 2.
    Poly den = Poly({cplx(-0.3), cplx(1.0)}) * Poly({cplx(-0.3 - 5e-9), cplx(1.0)});
    RationalFn f(Poly::one(), den);
    auto pp = principal_part_at(f, cplx(0.3));
    CHECK(pp.order() == 2);
}

TEST_CASE("circle_split: fixtures and recombination") {
    // 1/(w-2) + 3/w
    RationalFn f = RationalFn(Poly::one(), Poly({cplx(-2.0), cplx(1.0)})) +
                   RationalFn(Poly::constant(3.0), Poly::variable());
    auto sp = circle_split(f);
    CHECK(std::abs(sp.inner(cplx(0.5)) - 1.0 / (0.5 - 2.0)) < 1e-12);
    CHECK(std::abs(sp.outer(cplx(0.5)) - 3.0 / 0.5) < 1e-12);

    // entire input goes to inner
    RationalFn g(Poly({cplx(5.0), cplx(0.0), cplx(1.0)}));
    auto sp2 = circle_split(g);
    CHECK(sp2.outer.is_zero());
    CHECK(qdtest::circle_max_diff(sp2.inner, g, 32) < 1e-13);

    // (w^2+1)/(w(w-3)): partial-fraction oracle = pointwise recombination
    RationalFn h(Poly({cplx(1.0), cplx(0.0), cplx(1.0)}),
                 Poly::variable() * Poly({cplx(-3.0), cplx(1.0)}));
    auto sp3 = circle_split(h);
    CHECK(qdtest::circle_max_diff(sp3.inner + sp3.outer, h, 64) < 1e-12);
}

TEST_CASE("circle_split: random recombination property") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        RationalFn f = qdtest::random_rational_off_circle(rng, 4, 2, 2);
        auto sp = circle_split(f);
        double scale = 0.0;
        for (int k = 0; k < 128; ++k) scale = std::max(scale, std::abs(f(unit(qdtest::two_pi * k / 128))));
        CHECK(qdtest::circle_max_diff(sp.inner + sp.outer, f, 128) <= 1e-10 * (1.0 + scale));
        // outer vanishes at infinity
        CHECK(sp.outer.numer().degree() < std::max(sp.outer.denom().degree(), 1));
    }
}

TEST_CASE("circle_split: boundary pole rejected") {
    RationalFn f(Poly::one(), Poly({cplx(-1.0), cplx(1.0)}));  // pole at w = 1
    CHECK_THROWS_WITH_AS(circle_split(f), "boundary pole", error);
}

TEST_CASE("reflect: fixtures") {
    // w -> 1/w
    RationalFn idw = RationalFn::variable();
    RationalFn r = reflect(idw);
    CHECK(std::abs(r(cplx(2.0)) - cplx(0.5)) < 1e-14);

    // constants conjugate
    RationalFn c = RationalFn::constant(cplx(1.0, 2.0));
    CHECK(std::abs(reflect(c)(cplx(0.3)) - cplx(1.0, -2.0)) < 1e-14);

    // i/(w-2i): pointwise conj identity on the circle
    RationalFn f(Poly::constant(cplx(0.0, 1.0)), Poly({cplx(0.0, -2.0), cplx(1.0)}));
    RationalFn g = reflect(f);
    for (int k = 0; k < 64; ++k) {
        cplx w = unit(qdtest::two_pi * k / 64);
        CHECK(std::abs(g(w) - std::conj(f(w))) < 1e-13);
    }
}

TEST_CASE("reflect: involution property") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        RationalFn f = qdtest::random_rational_off_circle(rng, 3, 1, 1);
        RationalFn rr = reflect(reflect(f));
        // canonical forms: compare coefficient-wise
        REQUIRE(rr.numer().degree() == f.numer().degree());
        REQUIRE(rr.denom().degree() == f.denom().degree());
        for (int k = 0; k <= f.numer().degree(); ++k)
            CHECK(std::abs(rr.numer().coeff(k) - f.numer().coeff(k)) < 1e-12 * (1.0 + f.numer().scale()));
        for (int k = 0; k <= f.denom().degree(); ++k)
            CHECK(std::abs(rr.denom().coeff(k) - f.denom().coeff(k)) < 1e-12 * (1.0 + f.denom().scale()));
    }
}

TEST_CASE("antiderivative_eval: fixtures") {
    // integral of 2w from 0 to 1 is 1
    RationalFn f(Poly({cplx(0.0), cplx(2.0)}));
    CHECK(std::abs(antiderivative_eval(f, cplx(1.0), cplx(0.0)) - cplx(1.0)) < 1e-14);

    // integral of 1/(w-2)^2 from 0 to 0.5: the antiderivative -1/(w-2) gives
    // -1/(0.5-2) + 1/(0-2) = 2/3 - 1/2 = 1/6 (positive integrand)
    Poly den = Poly({cplx(-2.0), cplx(1.0)}) * Poly({cplx(-2.0), cplx(1.0)});
    RationalFn g(Poly::one(), den);
    CHECK(std::abs(antiderivative_eval(g, cplx(0.5), cplx(0.0)) - cplx(1.0 / 6.0)) < 1e-14);
    CHECK(std::abs(antiderivative_eval(g, cplx(0.5), cplx(0.0)) -
                   oracle::gl_segment_integral(g, cplx(0.0), cplx(0.5))) < 1e-13);

    // 1/w has residue 1 at an interior pole
    RationalFn h(Poly::one(), Poly::variable());
    CHECK_THROWS_WITH_AS(antiderivative_eval(h, cplx(0.5), cplx(0.5)),
                         "multivalued antiderivative", error);

    // endpoint sitting on a pole
    CHECK_THROWS_WITH_AS(antiderivative_eval(RationalFn(Poly::one(),
                                                        Poly({cplx(-0.5), cplx(1.0)}) *
                                                            Poly({cplx(-0.5), cplx(1.0)})),
                                             cplx(0.5), cplx(0.0)),
                         "path hits pole", error);
}

TEST_CASE("antiderivative_eval agrees with Gauss-Legendre panels") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        // Residue-free interior pole: derivative of a random rational.
        RationalFn base = qdtest::random_rational_off_circle(rng, 3, 1, 1);
        RationalFn f = base.derivative();
        cplx a = rand_cplx(rng, 0.4);
        cplx b = rand_cplx(rng, 0.4);
        bool safe = true;
        for (const auto& p : f.poles()) {
            if (std::abs(p.location - a) < 0.15 || std::abs(p.location - b) < 0.15) safe = false;
            // keep the straight path clear as well
            cplx d = b - a;
            double seg = std::abs(d);
            if (seg > 0) {
                double t = std::clamp((std::conj(d) * (p.location - a)).real() / (seg * seg), 0.0, 1.0);
                if (std::abs(a + t * d - p.location) < 0.15) safe = false;
            }
        }
        if (!safe) continue;
        cplx closed = antiderivative_eval(f, b, a);
        cplx quad = oracle::gl_segment_integral(f, a, b, 64);
        CHECK(std::abs(closed - quad) < 1e-9 * (1.0 + std::abs(closed)));
    }
}

TEST_CASE("taylor jets of rationals") {
    // 1/(w+2) at 0.5: jet = (0.4, -0.16, 0.064, ...)
    RationalFn f(Poly::one(), Poly({cplx(2.0), cplx(1.0)}));
    auto jet = f.taylor(cplx(0.5), 2);
    CHECK(std::abs(jet[0] - cplx(0.4)) < 1e-14);
    CHECK(std::abs(jet[1] - cplx(-0.16)) < 1e-14);
    CHECK(std::abs(jet[2] - cplx(0.064)) < 1e-14);
}
