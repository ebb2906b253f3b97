#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewcc/skewpoly.hpp"

using namespace skewcc;

namespace {

Ring f4_ring() { return Ring(RingSpec{FieldSpec{2, 2, {}}, {0, 1, 2}, {0, 1}}); }
Ring f5_ring() { return Ring(RingSpec{FieldSpec{5, 1, {}}, {0, 1}, {0, 1}}); }
Ring f8_ring() { return Ring(RingSpec{FieldSpec{2, 3, {1, 1, 0, 1}}, {0, 1}, {0, 1, 2, 4}}); }
Ring f9_ring() { return Ring(RingSpec{FieldSpec{3, 2, {2, 1, 1}}, {0, 1, 2}, {1, 2}}); }

FieldPoly fpoly(const Field& F, Autom a, const std::vector<std::uint32_t>& ix) {
    std::vector<FieldElement> cs;
    cs.reserve(ix.size());
    for (std::uint32_t c : ix) cs.push_back(F.element(c));
    return FieldPoly(a, std::move(cs));
}

SkewPoly rpoly(const Ring& R, Autom a, const std::vector<std::vector<std::uint32_t>>& crts) {
    std::vector<RingElement> cs;
    cs.reserve(crts.size());
    for (const auto& crt : crts) cs.push_back(R.element(crt));
    return SkewPoly(a, std::move(cs));
}

SkewPoly random_rpoly(const Ring& R, Autom a, int deg, std::mt19937& rng, bool unit_lead = false) {
    std::uniform_int_distribution<std::uint32_t> any(0, R.field().size() - 1);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, R.field().size() - 1);
    std::vector<RingElement> cs;
    for (int d = 0; d <= deg; ++d) {
        std::vector<std::uint32_t> crt(R.comps());
        for (auto& c : crt) c = (unit_lead && d == deg) ? nonzero(rng) : any(rng);
        cs.push_back(R.element(std::move(crt)));
    }
    return SkewPoly(a, std::move(cs));
}

}  // namespace

TEST_CASE("twisted product rule x * a = sigma(a) * x") {
    Field f9(FieldSpec{3, 2, {2, 1, 1}});  // b^2 = 1 - b
    Autom th = Autom::make_theta(1);
    FieldPoly x = fpoly(f9, th, {0, 1});
    FieldPoly beta = fpoly(f9, th, {3});
    // b^3 = b*b^2 = b - b^2 = 2b + 2
    CHECK(x * beta == fpoly(f9, th, {0, 8}));
    CHECK(f9.frobenius_ix(3, 1) == 8);

    std::mt19937 rng(521);
    Ring R9 = f9_ring();
    for (Autom a : {Autom::make_psi(), Autom::make_theta(1)}) {
        for (int trial = 0; trial < 200; ++trial) {
            SkewPoly c = random_rpoly(R9, a, 0, rng);
            SkewPoly xx = rpoly(R9, a, {{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}});
            SkewPoly lhs = xx * c;
            REQUIRE(lhs.degree() <= 1);
            if (!lhs.is_zero()) CHECK(lhs[1] == apply_autom(a, c[0]));
        }
    }
}

TEST_CASE("a quadratic-field factorization of x^6 - 1") {
    Field f4(2, 2);
    Autom th = Autom::make_theta(1);
    // (x^3 + b*x^2 + b^2*x + b^2) * (x^3 + b^2*x^2 + b^2*x + b) = x^6 + 1
    FieldPoly a = fpoly(f4, th, {3, 3, 2, 1});
    FieldPoly b = fpoly(f4, th, {2, 3, 3, 1});
    FieldPoly m = fpoly(f4, th, {1, 0, 0, 0, 0, 0, 1});
    CHECK(a * b == m);

    auto [q, r] = right_divrem(m, b);
    CHECK(q == a);
    CHECK(r.is_zero());
    auto [q1, r1] = right_divrem(m, fpoly(f4, th, {1}));
    CHECK(q1 == m);
    CHECK(r1.is_zero());
}

TEST_CASE("identity-tagged product is the commutative product") {
    Field f5(5, 1);
    std::mt19937 rng(522);
    std::uniform_int_distribution<std::uint32_t> dist(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::uint32_t> ac(1 + trial % 5), bc(1 + (trial / 2) % 5);
        for (auto& c : ac) c = dist(rng);
        for (auto& c : bc) c = dist(rng);
        FieldPoly a = fpoly(f5, Autom::id(), ac);
        FieldPoly b = fpoly(f5, Autom::id(), bc);
        CHECK(a * b == b * a);
        if (a.is_zero() || b.is_zero()) continue;
        // plain convolution
        std::vector<std::uint32_t> conv(ac.size() + bc.size() - 1, 0);
        for (std::size_t i = 0; i < ac.size(); ++i)
            for (std::size_t j = 0; j < bc.size(); ++j) conv[i + j] = (conv[i + j] + ac[i] * bc[j]) % 5;
        CHECK(a * b == fpoly(f5, Autom::id(), conv));
    }
}

TEST_CASE("known right divisors of x^n - alpha") {
    Ring R4 = f4_ring();
    Autom psi = Autom::make_psi();
    RingElement v = R4.from_uv({{0, 1}});
    RingElement w = R4.from_uv({{1, 1}});  // 1 - v
    SkewPoly g1(psi, {R4.one(), w, R4.one(), R4.one(), R4.one(), v, R4.one()});
    CHECK(is_right_divisor(g1, x_pow_minus(R4, psi, 12, R4.one())));

    Ring R8 = f8_ring();
    RingElement u = R8.from_uv({{0}, {1}});
    RingElement c = u * (R8.from_uv({R8.gam_poly(0)}) + R8.from_uv({R8.gam_poly(2)}));
    SkewPoly g2(psi, {R8.one(), c, R8.zero(), c, R8.one()});
    CHECK(is_right_divisor(g2, x_pow_minus(R8, psi, 8, R8.one())));

    Ring R9 = f9_ring();
    Autom th = Autom::make_theta(1);
    RingElement al = R9.element({1, 1, 2, 1, 2, 1});
    SkewPoly h(th, {R9.one(), al, R9.one(), al, R9.one(), al, R9.one()});
    CHECK(is_right_divisor(h, x_pow_minus(R9, th, 7, al)));

    Field f5(5, 1);
    CHECK(is_right_divisor(fpoly(f5, Autom::id(), {4, 1}), fpoly(f5, Autom::id(), {4, 0, 1})));
}

TEST_CASE("division preconditions") {
    Ring R4 = f4_ring();
    Autom psi = Autom::make_psi();
    SkewPoly f = x_pow_minus(R4, psi, 4, R4.one());
    CHECK_THROWS_AS(right_divrem(f, SkewPoly::zero(psi)), std::domain_error);
    // eta(0,0) is a zero divisor, so no division by it
    SkewPoly bad(psi, {R4.one(), R4.eta(0, 0)});
    CHECK_THROWS_AS(right_divrem(f, bad), std::domain_error);
    SkewPoly other = x_pow_minus(R4, Autom::id(), 2, R4.one());
    CHECK_THROWS_AS(f * other, std::invalid_argument);
    CHECK_THROWS_AS(f + other, std::invalid_argument);
    CHECK_THROWS_AS((void)right_divrem(f, other), std::invalid_argument);
}

TEST_CASE("center of the psi-twisted ring") {
    Ring R4 = f4_ring();  // l = 2
    Autom psi = Autom::make_psi();
    CHECK(is_central(x_pow_minus(R4, psi, 12, R4.one())));
    CHECK_FALSE(is_central(x_pow_minus(R4, psi, 7, R4.one())));
    RingElement v = R4.from_uv({{0, 1}});
    CHECK_FALSE(is_central(SkewPoly(psi, {R4.zero(), R4.zero(), v})));
    CHECK(is_central(SkewPoly(psi, {R4.constant(R4.field().element(3))})));

    // central polynomials commute with everything
    std::mt19937 rng(523);
    for (int trial = 0; trial < 200; ++trial) {
        SkewPoly a = random_rpoly(R4, psi, trial % 4, rng);
        std::uniform_int_distribution<std::uint32_t> cdist(0, 3);
        std::vector<RingElement> cc;
        for (int d = 0; d <= 2; ++d) {
            cc.push_back(R4.constant(R4.field().element(cdist(rng))));
            if (d < 2) cc.push_back(R4.zero());  // only degrees 0, 2, 4
        }
        SkewPoly c(psi, std::move(cc));
        CHECK(c * a == a * c);
    }
}

TEST_CASE("twist substitution x -> alpha x") {
    Field f5(5, 1);
    FieldPoly f = fpoly(f5, Autom::id(), {1, 1, 1});
    CHECK(eval_twist(f, f5.element(1)) == f);
    CHECK(eval_twist(f, f5.element(4)) == fpoly(f5, Autom::id(), {1, 4, 1}));
    CHECK_THROWS_AS(eval_twist(f, f5.element(0)), std::domain_error);
    CHECK_THROWS_AS(eval_twist(f, f5.element(2)), std::domain_error);

    std::mt19937 rng(524);
    Ring R5 = f5_ring();
    auto units = R5.selfdual_unit_candidates();
    for (int trial = 0; trial < 200; ++trial) {
        SkewPoly a = random_rpoly(R5, Autom::id(), trial % 6, rng);
        const RingElement& al = units[trial % units.size()];
        CHECK(eval_twist(eval_twist(a, al), al) == a);
    }
    Ring R9 = f9_ring();
    Autom th = Autom::make_theta(1);
    RingElement minus1 = -R9.one();
    for (int trial = 0; trial < 100; ++trial) {
        SkewPoly a = random_rpoly(R9, th, trial % 6, rng);
        CHECK(eval_twist(eval_twist(a, minus1), minus1) == a);
    }
}

TEST_CASE("degree bookkeeping and scaling") {
    Ring R9 = f9_ring();
    Autom th = Autom::make_theta(1);
    SkewPoly z = SkewPoly::zero(th);
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.leading(), std::domain_error);
    CHECK_THROWS_AS(z.monic(), std::domain_error);

    // trailing zeros trim away
    CHECK(SkewPoly(th, {R9.one(), R9.zero()}).degree() == 0);

    SkewPoly f(th, {R9.one(), R9.element({2, 1, 1, 1, 1, 1})});
    CHECK_THROWS_AS(f[5], std::invalid_argument);
    CHECK(f.is_monic() == false);
    CHECK(f.monic().is_monic());
    CHECK(f.monic().leading().is_one());
    SkewPoly nu(th, {R9.one(), R9.eta(0, 0)});
    CHECK_THROWS_AS(nu.monic(), std::domain_error);
}

TEST_CASE("printing") {
    Field f5(5, 1);
    CHECK(poly_to_string(fpoly(f5, Autom::id(), {1, 1, 1})) == "x^2+x+1");
    CHECK(poly_to_string(x_pow_minus(f5, Autom::id(), 3, f5.element(1))) == "x^3+4");
    CHECK(poly_to_string(fpoly(f5, Autom::id(), {0, 2})) == "2*x");
    CHECK(poly_to_string(FieldPoly::zero(Autom::id())) == "0");
    Ring R9 = f9_ring();
    SkewPoly g(Autom::make_theta(1), {R9.element({1, 1, 2, 1, 2, 1}), R9.one()});
    CHECK(poly_to_string(g) == "x+(1+2*u^2+2*u^2*v)");
}

TEST_CASE("algebra laws on random skew polynomials") {
    std::mt19937 rng(525);
    struct Case {
        Ring ring;
        Autom autom;
    };
    std::vector<Case> cases = {{f4_ring(), Autom::make_psi()},   {f4_ring(), Autom::make_theta(1)},
                               {f5_ring(), Autom::id()},         {f8_ring(), Autom::make_psi()},
                               {f9_ring(), Autom::make_theta(1)}, {f9_ring(), Autom::make_psi()}};
    for (const Case& cs : cases) {
        const Ring& R = cs.ring;
        for (int trial = 0; trial < 1000; ++trial) {
            SkewPoly a = random_rpoly(R, cs.autom, trial % 5, rng);
            SkewPoly b = random_rpoly(R, cs.autom, (trial / 2) % 5, rng);
            SkewPoly c = random_rpoly(R, cs.autom, (trial / 3) % 5, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
            CHECK((a - a).is_zero());

            SkewPoly g = random_rpoly(R, cs.autom, 1 + trial % 4, rng, /*unit_lead=*/true);
            SkewPoly f = random_rpoly(R, cs.autom, 2 + trial % 5, rng);
            auto [q, r] = right_divrem(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
            SkewPoly h = random_rpoly(R, cs.autom, 1 + trial % 3, rng, /*unit_lead=*/true);
            CHECK((h * g).degree() == h.degree() + g.degree());
        }
    }
}
