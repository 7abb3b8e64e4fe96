#include <catch2/catch.hpp>

#include "nullfil/images.hpp"
#include "nullfil/parse.hpp"
#include "nullfil/selftest.hpp"

using namespace nullfil;

namespace {
const RationalDomain q;
}

TEST_CASE("classification of the contract examples", "[images]") {
    AlgebraHandle F3 = AlgebraHandle::finite(3);
    CHECK(classify(parse_polynomial("x1 x2 - x2 x1", q), F3) ==
          ImageDescriptor::power_ideal(F3, 3));
    CHECK(classify(parse_polynomial("x1 x2", q), F3) == ImageDescriptor::power_ideal(F3, 2));
    CHECK(classify(parse_polynomial("x1^2", q), F3) == ImageDescriptor::punctured_cone(F3, 2));
    CHECK(classify(parse_polynomial("x1 x2^2", q), F3) == ImageDescriptor::power_ideal(F3, 3));
    CHECK(classify(parse_polynomial("x1(x2 x3)", q), F3) == ImageDescriptor::zero(F3));

    CHECK_THROWS_AS(classify(parse_polynomial("x1 x2 + x1", q), F3), error);
}

TEST_CASE("descriptor canonicalization", "[images]") {
    AlgebraHandle F3 = AlgebraHandle::finite(3);
    CHECK(ImageDescriptor::power_ideal(F3, 4).canonicalized() == ImageDescriptor::zero(F3));
    CHECK(ImageDescriptor::punctured_cone(F3, 3).canonicalized() == ImageDescriptor::power_ideal(F3, 3));
    CHECK(ImageDescriptor::punctured_cone(F3, 4).canonicalized() == ImageDescriptor::zero(F3));
    CHECK(ImageDescriptor::punctured_cone(F3, 2).canonicalized() ==
          ImageDescriptor::punctured_cone(F3, 2));

    // squares on L_2 land exactly on span{e_2}
    AlgebraHandle F2 = AlgebraHandle::finite(2);
    CHECK(classify(parse_polynomial("x1^2", q), F2) == ImageDescriptor::power_ideal(F2, 2));

    // no truncation on the infinite algebra
    AlgebraHandle inf = AlgebraHandle::infinite();
    CHECK(classify(parse_polynomial("x1^2", q), inf) == ImageDescriptor::punctured_cone(inf, 2));
}

TEST_CASE("realize answers descriptor membership", "[images]") {
    AlgebraHandle F5 = AlgebraHandle::finite(5);
    auto cone = ImageDescriptor::punctured_cone(F5, 2);
    CHECK(realize(cone, Element<Rational>::zero(F5, Rational())));
    CHECK(!realize(cone, parse_element("e3", q, F5)));
    CHECK(realize(cone, parse_element("3*e2 + e4", q, F5)));
    CHECK(realize(ImageDescriptor::power_ideal(F5, 3), parse_element("e3 + e4", q, F5)));
    CHECK(!realize(ImageDescriptor::power_ideal(F5, 3), parse_element("e2 + e3", q, F5)));
    CHECK(realize(ImageDescriptor::zero(F5), Element<Rational>::zero(F5, Rational())));
}

TEST_CASE("preimage constructions", "[images]") {
    AlgebraHandle F3 = AlgebraHandle::finite(3);

    SECTION("sum-zero case takes its head coefficient from the target") {
        auto res = preimage(parse_polynomial("x1 x2 - x2 x1", q), F3, parse_element("e3", q, F3));
        auto* a = std::get_if<PreimageAssignment<Rational>>(&res);
        REQUIRE(a);
        CHECK(a->assignment.at(1) == parse_element("e2", q, F3));
        CHECK(a->assignment.at(2) == parse_element("e1", q, F3));
    }
    SECTION("cone with a rational root") {
        auto res = preimage(parse_polynomial("x1^2", q), F3, parse_element("4*e2 + 6*e3", q, F3));
        auto* a = std::get_if<PreimageAssignment<Rational>>(&res);
        REQUIRE(a);
        CHECK(a->assignment.at(1) == parse_element("2*e1 + 3*e2", q, F3));
    }
    SECTION("cone rejects targets with vanishing beta_d") {
        auto res = preimage(parse_polynomial("x1^2", q), F3, parse_element("e3", q, F3));
        auto* ni = std::get_if<PreimageNotInImage>(&res);
        REQUIRE(ni);
        CHECK(ni->reason == "beta_d_zero");
    }
    SECTION("cone reports the missing root") {
        auto res = preimage(parse_polynomial("x1^2", q), F3, parse_element("2*e2", q, F3));
        auto* nr = std::get_if<PreimageNeedsRoot<Rational>>(&res);
        REQUIRE(nr);
        CHECK(nr->exponent == 2);
        CHECK(nr->value == Rational(2));
    }
    SECTION("support violations and identities") {
        auto res = preimage(parse_polynomial("x1 x2", q), F3, parse_element("e1", q, F3));
        auto* ni = std::get_if<PreimageNotInImage>(&res);
        REQUIRE(ni);
        CHECK(ni->reason == "wrong_support");

        auto res2 = preimage(parse_polynomial("x1(x2 x3)", q), F3, parse_element("e3", q, F3));
        auto* ni2 = std::get_if<PreimageNotInImage>(&res2);
        REQUIRE(ni2);
        CHECK(ni2->reason == "identity_nonzero_target");

        auto res3 = preimage(parse_polynomial("x1(x2 x3)", q), F3,
                             Element<Rational>::zero(F3, Rational()));
        CHECK(std::holds_alternative<PreimageAssignment<Rational>>(res3));
    }
    SECTION("finite-field preimage searches residues") {
        FpDomain f7(7);
        AlgebraHandle F3h = AlgebraHandle::finite(3);
        auto fp = parse_polynomial("x1^2", f7);
        auto tp = parse_element("2*e2", f7, F3h);
        auto res = preimage(fp, F3h, tp);
        auto* a = std::get_if<PreimageAssignment<Fp>>(&res);
        REQUIRE(a);  // 3^2 = 2 mod 7
        CHECK(evaluate(fp, a->assignment) == tp);
    }
}

TEST_CASE("exact roots", "[images]") {
    CHECK(kth_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(kth_root(Rational(-8), 3) == Rational(-2));
    CHECK(kth_root(Rational(16), 4) == Rational(2));
    CHECK(!kth_root(Rational(2), 2).has_value());
    CHECK(!kth_root(Rational(-4), 2).has_value());
    CHECK(kth_root(Rational(0), 5) == Rational(0));
    CHECK(kth_root(Fp(2, 7), 2) == Fp(3, 7));
    CHECK(!kth_root(Fp(3, 5), 2).has_value());
}

TEST_CASE("vector-space criterion matches the cone flag", "[images][property]") {
    selftest::Rng rng(67);
    for (int i = 0; i < 80; ++i) {
        unsigned m = selftest::uniform(rng, 1, 3);
        MultiDegree mdeg;
        unsigned budget = selftest::uniform(rng, m, 4);
        for (VarIndex k = 1; k <= m; ++k) mdeg.add(k, 1);
        for (unsigned extra = m; extra < budget; ++extra) mdeg.add(selftest::uniform(rng, 1, m));

        AlgebraHandle alg = AlgebraHandle::finite(selftest::uniform(rng, 2, 5));
        auto f = selftest::random_multihomogeneous(rng, mdeg, 3, 3);
        auto cls = classify_full(f, alg);
        if (cls.kase == ImageCase::identity) continue;

        bool linear_head_exists = false;
        for (VarIndex j : cls.heads->linear_variables)
            if (!cls.heads->alpha_of(j).is_zero()) linear_head_exists = true;
        bool cone_condition = !cls.heads->alpha_sum.is_zero() && !linear_head_exists;
        CHECK((cls.kase == ImageCase::cone) == cone_condition);
        CHECK(cls.descriptor.closure_required == (cls.descriptor.kind == ImageKind::punctured_cone));
    }
}

TEST_CASE("preimage round trip on random targets", "[images][property]") {
    selftest::Rng rng(71);
    AlgebraHandle F4 = AlgebraHandle::finite(4);
    auto f = parse_polynomial("x1 x2 - 3 x2 x1", q);  // sum != 0, image L^2
    for (int i = 0; i < 40; ++i) {
        auto target = selftest::random_element(rng, F4, 2, 4);
        auto res = preimage(f, F4, target);
        auto* a = std::get_if<PreimageAssignment<Rational>>(&res);
        REQUIRE(a);
        if (!a->assignment.empty()) CHECK(evaluate(f, a->assignment) == target);
    }
}
