#include <catch2/catch.hpp>

#include "nullfil/oracle.hpp"
#include "nullfil/parse.hpp"
#include "nullfil/selftest.hpp"

using namespace nullfil;

namespace {
const RationalDomain q;
}

TEST_CASE("generic evaluation coordinates", "[oracle]") {
    auto zero_everywhere = generic_evaluate(parse_polynomial("x1(x2 x3)", q), 3, 4);
    for (const auto& c : zero_everywhere) CHECK(c.is_zero());

    auto coords = generic_evaluate(parse_polynomial("x1 x2", q), 2, 2);
    CHECK(coords[0].is_zero());
    CommPoly expected = CommPoly::indeterminate({2, 1}) * CommPoly::indeterminate({1, 1});
    CHECK(coords[1] == expected);

    auto at3 = generic_evaluate(parse_polynomial("x1 x2 x3 - x2 x1 x3", q), 3, 3);
    for (const auto& c : at3) CHECK(c.is_zero());
    auto at4 = generic_evaluate(parse_polynomial("x1 x2 x3 - x2 x1 x3", q), 3, 4);
    CHECK(!at4[3].is_zero());
}

TEST_CASE("identity oracle", "[oracle]") {
    for (unsigned n = 2; n <= 5; ++n) {
        CHECK(identity_oracle(selftest::leibniz_kernel(), AlgebraHandle::finite(n)));
        CHECK(identity_oracle(selftest::swap_chain(n), AlgebraHandle::finite(n)));
    }
    CHECK(identity_oracle(selftest::leibniz_kernel(), AlgebraHandle::infinite()));
    CHECK(!identity_oracle(parse_polynomial("x1 x2 - x2 x1", q), AlgebraHandle::infinite()));
}

TEST_CASE("infinite-algebra reduction is stable one dimension higher", "[oracle][property]") {
    selftest::Rng rng(73);
    for (int i = 0; i < 50; ++i) {
        auto f = selftest::random_free_poly(rng, 3, 4, 3);
        unsigned d = f.degree();
        bool at_d1 = identity_oracle(f, AlgebraHandle::finite(d + 1));
        bool at_d2 = identity_oracle(f, AlgebraHandle::finite(d + 2));
        CHECK(at_d1 == at_d2);
        CHECK(identity_oracle(f, AlgebraHandle::infinite()) == at_d1);
    }
}

TEST_CASE("exhaustive finite-field images", "[oracle]") {
    auto img = brute_force_image(parse_polynomial("x1 x2 - x2 x1", q), 3, 2);
    REQUIRE(img.size() == 2);
    CHECK(img.contains_code(0));
    CHECK(img.contains(Element<Fp>::basis(AlgebraHandle::finite(3), 3, Fp(1, 2))));

    auto zero_img = brute_force_image(parse_polynomial("x1(x2 x3)", q), 2, 3);
    CHECK(zero_img.size() == 1);

    auto plane = brute_force_image(parse_polynomial("x1 x2", q), 2, 2);
    REQUIRE(plane.size() == 2);
    CHECK(plane.contains(Element<Fp>::basis(AlgebraHandle::finite(2), 2, Fp(1, 2))));

    CHECK_THROWS_AS(brute_force_image(parse_polynomial("x1 x2 x3", q), 5, 5), error);
    CHECK_THROWS_AS(brute_force_image(parse_polynomial("1/2 x1 x2", q), 3, 2), error);
}

TEST_CASE("image sets encode and decode consistently", "[oracle]") {
    AlgebraHandle F3 = AlgebraHandle::finite(3);
    ImageSet img(F3, 5, {0, 7, 124});
    for (std::uint64_t code : img.codes()) CHECK(ImageSet::encode(img.decode(code)) == code);
    CHECK(img.contains_code(7));
    CHECK(!img.contains_code(8));
}

TEST_CASE("cross-checks on the contract examples", "[oracle]") {
    auto rep = cross_check(parse_polynomial("x1 x2 - x2 x1", q), 3, 3);
    CHECK(rep.ok);
    CHECK(rep.inclusion);
    CHECK(rep.equality == EqualityMode::exact);
    CHECK(rep.descriptor == ImageDescriptor::power_ideal(AlgebraHandle::finite(3), 3));

    auto cone = cross_check(parse_polynomial("x1^2", q), 3, 3);
    CHECK(cone.ok);
    CHECK(cone.equality == EqualityMode::split_only);

    auto zero = cross_check(parse_polynomial("x1 x2 x3 - x2 x1 x3", q), 3, 2);
    CHECK(zero.ok);
    CHECK(zero.equality == EqualityMode::exact);
    CHECK(zero.descriptor == ImageDescriptor::zero(AlgebraHandle::finite(3)));
}

TEST_CASE("oracle and rewrite agree on a random corpus", "[oracle][property]") {
    selftest::Rng rng(79);
    for (int i = 0; i < 60; ++i) {
        auto f = (i % 3 == 0) ? selftest::random_identity_member(rng, selftest::uniform(rng, 2, 5), 3)
                              : selftest::random_free_poly(rng, 3, 5, 3);
        for (unsigned n = 2; n <= 4; ++n) {
            AlgebraHandle alg = AlgebraHandle::finite(n);
            CHECK(identity_oracle(f - normal_form(f, alg).lift(), alg));
            CHECK(identity_oracle(f, alg) == normal_form(f, alg).is_zero());
        }
    }
}
