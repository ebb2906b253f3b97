#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewcc/ring.hpp"

using namespace skewcc;

namespace {

// F_4 with b^2 = b + 1; f = u(u-1)(u-b), g = v(v-1)
Ring f4_ring() { return Ring(RingSpec{FieldSpec{2, 2, {}}, {0, 1, 2}, {0, 1}}); }

// F_5; f = u(u-1), g = v(v-1)
Ring f5_ring() { return Ring(RingSpec{FieldSpec{5, 1, {}}, {0, 1}, {0, 1}}); }

// F_8 with b^3 = b + 1; f = u(u-1), g = v(v-1)(v-b)(v-b^2)
Ring f8_ring() { return Ring(RingSpec{FieldSpec{2, 3, {1, 1, 0, 1}}, {0, 1}, {0, 1, 2, 4}}); }

// F_9 with b^2 = 1 - b; f = u^3 - u, g = v^2 - 1
Ring f9_ring() { return Ring(RingSpec{FieldSpec{3, 2, {2, 1, 1}}, {0, 1, 2}, {1, 2}}); }

// F_25 with b^2 = b - 2; f = u^3 - u, g = v^2 - v
Ring f25_ring() { return Ring(RingSpec{FieldSpec{5, 2, {2, 4, 1}}, {0, 1, 4}, {0, 1}}); }

RingElement random_element(const Ring& R, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, R.field().size() - 1);
    std::vector<std::uint32_t> crt(R.comps());
    for (auto& c : crt) c = dist(rng);
    return R.element(std::move(crt));
}

// gamma_j as a ring element (a v-polynomial has a single u-degree-0 row)
RingElement gamma(const Ring& R, std::size_t j) { return R.from_uv({R.gam_poly(j)}); }

// eps_i as a ring element (one single-entry row per u-degree)
RingElement eps(const Ring& R, std::size_t i) {
    UVTable t;
    for (std::uint32_t c : R.eps_poly(i)) t.push_back({c});
    return R.from_uv(t);
}

}  // namespace

TEST_CASE("idempotents are orthogonal, idempotent, and sum to one") {
    for (const Ring& R : {f4_ring(), f5_ring(), f8_ring(), f9_ring(), f25_ring()}) {
        RingElement sum = R.zero();
        for (std::size_t i = 0; i < R.k(); ++i)
            for (std::size_t j = 0; j < R.l(); ++j) {
                RingElement e = R.eta(i, j);
                CHECK(e * e == e);
                CHECK_FALSE(e.is_unit());
                // the bivariate table is the same element
                CHECK(R.from_uv(R.eta_table(i, j)) == e);
                for (std::size_t r = 0; r < R.k(); ++r)
                    for (std::size_t s = 0; s < R.l(); ++s)
                        if (r != i || s != j) CHECK((e * R.eta(r, s)).is_zero());
                sum = sum + e;
            }
        CHECK(sum.is_one());
    }
}

TEST_CASE("idempotent polynomials match hand expansions") {
    Ring R4 = f4_ring();
    // eps_1 = (u-1)(u-b)/b = 1 + b*u + (b+1)*u^2
    CHECK(R4.eps_poly(0) == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(R4.gam_poly(0) == std::vector<std::uint32_t>{1, 1});  // 1 - v
    CHECK(R4.gam_poly(1) == std::vector<std::uint32_t>{0, 1});  // v

    Ring R8 = f8_ring();
    CHECK(R8.eps_poly(0) == std::vector<std::uint32_t>{1, 1});  // 1 - u
    CHECK(R8.eps_poly(1) == std::vector<std::uint32_t>{0, 1});  // u

    Ring R5 = f5_ring();
    CHECK(R5.eta_table(0, 0) == UVTable{{1, 4}, {4, 1}});  // (1-u)(1-v)
    CHECK(R5.eta_table(0, 1) == UVTable{{0, 1}, {0, 4}});  // (1-u)v
    CHECK(R5.eta_table(1, 0) == UVTable{{0, 0}, {1, 4}});  // u(1-v)
    CHECK(R5.eta_table(1, 1) == UVTable{{0, 0}, {0, 1}});  // uv
}

TEST_CASE("uv evaluation and interpolation") {
    Ring R9 = f9_ring();
    // 1 - u^2 - u^2 v evaluates to 1 at u=0 and to -v at u=+-1
    RingElement a = R9.from_uv({{1, 0}, {0, 0}, {2, 2}});
    CHECK(a.crt() == std::vector<std::uint32_t>{1, 1, 2, 1, 2, 1});
    CHECK(a.is_unit());

    // poly u has crt entries equal to the f-roots, repeated per g-root
    CHECK(R9.from_uv({{0}, {1}}).crt() == std::vector<std::uint32_t>{0, 0, 1, 1, 2, 2});

    Ring R25 = f25_ring();
    RingElement alpha6 = R25.element({1, 1, 4, 1, 4, 1});
    CHECK(R25.to_uv(alpha6) == UVTable{{1, 0}, {0, 0}, {3, 2}});
    CHECK(to_pretty(alpha6) == "1+3*u^2+2*u^2*v");

    Ring R5 = f5_ring();
    CHECK(R5.to_uv(R5.element({1, 0, 0, 0})) == UVTable{{1, 4}, {4, 1}});
    CHECK(to_pretty(R5.one()) == "1");
    CHECK(to_pretty(R5.zero()) == "0");
    CHECK(R5.from_uv({{1}}).is_one());

    std::mt19937 rng(404);
    for (const Ring& R : {f4_ring(), f5_ring(), f8_ring(), f9_ring(), f25_ring()})
        for (int trial = 0; trial < 200; ++trial) {
            RingElement e = random_element(R, rng);
            CHECK(R.from_uv(R.to_uv(e)) == e);
        }

    CHECK_THROWS_AS(R5.from_uv({{1, 0}, {1}}), std::invalid_argument);  // ragged
}

TEST_CASE("psi rotates the g-root coordinate") {
    Ring R4 = f4_ring();
    RingElement one_minus_v = R4.from_uv({{1, 1}});
    RingElement v = R4.from_uv({{0, 1}});
    CHECK(one_minus_v.psi() == v);
    CHECK(v.psi() == one_minus_v);

    Ring R8 = f8_ring();
    for (std::size_t j = 0; j < 4; ++j) CHECK(gamma(R8, j).psi() == gamma(R8, (j + 1) % 4));
    for (std::size_t i = 0; i < 2; ++i) CHECK(eps(R8, i).psi() == eps(R8, i));

    std::mt19937 rng(405);
    for (const Ring& R : {f4_ring(), f5_ring(), f8_ring(), f9_ring(), f25_ring()}) {
        std::uniform_int_distribution<std::uint32_t> cdist(0, R.field().size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            RingElement a = random_element(R, rng);
            RingElement b = random_element(R, rng);
            CHECK(a.psi() * b.psi() == (a * b).psi());
            CHECK(a.psi() + b.psi() == (a + b).psi());
            CHECK(a.psi(R.l()) == a);
            RingElement c = R.constant(R.field().element(cdist(rng)));
            CHECK(c.psi() == c);
            CHECK(apply_autom(Autom::make_psi(), a) == a.psi());
        }
    }
}

TEST_CASE("theta is the componentwise Frobenius") {
    Ring R9 = f9_ring();
    std::mt19937 rng(406);
    for (int trial = 0; trial < 200; ++trial) {
        RingElement a = random_element(R9, rng);
        RingElement b = random_element(R9, rng);
        RingElement fa = a.theta(1);
        for (std::size_t c = 0; c < R9.comps(); ++c)
            CHECK(fa.comp(c) == a.comp(c).frobenius(1));
        CHECK(a.theta(1) * b.theta(1) == (a * b).theta(1));
        CHECK(a.theta(1) + b.theta(1) == (a + b).theta(1));
        CHECK(a.theta(2) == a);           // t = s
        CHECK(a.theta(1, 2) == a);        // |theta_1| = s/1 = 2
        CHECK(apply_autom(Autom::make_theta(1), a) == a.theta(1));
    }
    // entries in the prime subfield are fixed
    CHECK(R9.element({0, 1, 2, 0, 1, 2}).theta(1) == R9.element({0, 1, 2, 0, 1, 2}));

    Ring R16(RingSpec{FieldSpec{2, 4, {}}, {0, 1}, {0}});
    RingElement x = R16.element({3, 7});
    CHECK_THROWS_AS(x.theta(3), std::invalid_argument);  // 3 does not divide 4
    CHECK(x.theta(2, 2) == x);
}

TEST_CASE("units and inverses") {
    Ring R9 = f9_ring();
    CHECK(R9.one().is_unit());
    CHECK_FALSE(R9.zero().is_unit());
    CHECK_FALSE(R9.eta(0, 0).is_unit());
    CHECK_THROWS_AS(R9.eta(0, 0).inverse(), std::domain_error);

    std::mt19937 rng(407);
    for (const Ring& R : {f4_ring(), f5_ring(), f9_ring()})
        for (int trial = 0; trial < 200; ++trial) {
            RingElement a = random_element(R, rng);
            bool nonzero = true;
            for (std::uint32_t c : a.crt()) nonzero = nonzero && c != 0;
            CHECK(a.is_unit() == nonzero);
            if (nonzero) CHECK((a * a.inverse()).is_one());
        }
}

TEST_CASE("self-dual unit candidates") {
    auto c5 = f5_ring().selfdual_unit_candidates();
    CHECK(c5.size() == 16);  // 2^4 sign patterns
    for (const RingElement& u : c5) {
        CHECK(u.is_unit());
        CHECK((u * u).is_one());
    }
    for (std::size_t a = 0; a < c5.size(); ++a)
        for (std::size_t b = a + 1; b < c5.size(); ++b) CHECK(c5[a] != c5[b]);

    CHECK(f9_ring().selfdual_unit_candidates().size() == 64);  // 2^6

    auto c4 = f4_ring().selfdual_unit_candidates();  // characteristic 2: +1 = -1
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].is_one());

    std::vector<std::uint32_t> many(21);
    for (std::uint32_t i = 0; i < 21; ++i) many[i] = i;
    Ring big(RingSpec{FieldSpec{5, 2, {2, 4, 1}}, many, {0}});
    CHECK_THROWS_AS(big.selfdual_unit_candidates(), std::invalid_argument);
}

TEST_CASE("ring laws on random elements") {
    std::mt19937 rng(408);
    for (const Ring& R : {f4_ring(), f5_ring(), f8_ring(), f9_ring(), f25_ring()}) {
        for (int trial = 0; trial < 1000; ++trial) {
            RingElement a = random_element(R, rng);
            RingElement b = random_element(R, rng);
            RingElement c = random_element(R, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            CHECK(-a + a == R.zero());
            CHECK(a * R.one() == a);
        }
    }
}

TEST_CASE("invalid specifications and mixed-ring operands") {
    CHECK_THROWS_AS(Ring(RingSpec{FieldSpec{5, 1, {}}, {0, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Ring(RingSpec{FieldSpec{5, 1, {}}, {}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Ring(RingSpec{FieldSpec{5, 1, {}}, {0, 7}, {1}}), std::invalid_argument);

    Ring A = f5_ring();
    CHECK_THROWS_AS(A.element({1, 2, 3}), std::invalid_argument);           // wrong length
    CHECK_THROWS_AS(A.element({1, 2, 3, 9}), std::invalid_argument);        // entry out of range
    Ring B = f4_ring();
    CHECK_THROWS_AS(A.one() + B.one(), std::invalid_argument);
    CHECK_THROWS_AS(A.constant(B.field().element(2)), std::invalid_argument);
}
