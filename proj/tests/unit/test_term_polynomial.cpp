#include <catch2/catch.hpp>

#include <random>

#include "nullfil/parse.hpp"
#include "nullfil/polynomial.hpp"
#include "nullfil/selftest.hpp"
#include "nullfil/term.hpp"

using namespace nullfil;

namespace {
const RationalDomain q;

Term leaf(VarIndex k) { return Term::leaf(k); }
}  // namespace

TEST_CASE("parsing denotations", "[term]") {
    SECTION("explicit brackets keep the tree shape") {
        auto f = parse_polynomial("x1*(x2*x3)", q);
        REQUIRE(f.term_count() == 1);
        const auto& [t, c] = *f.terms().begin();
        CHECK(c.is_one());
        CHECK(t == Term::node(leaf(1), Term::node(leaf(2), leaf(3))));
        CHECK(!LeftNormedWord::from_term(t).has_value());
    }
    SECTION("juxtaposition is left-associative") {
        auto f = parse_polynomial("x1 x2 x3", q);
        const auto& t = f.terms().begin()->first;
        auto w = LeftNormedWord::from_term(t);
        REQUIRE(w.has_value());
        CHECK(w->letters() == std::vector<VarIndex>{1, 2, 3});
    }
    SECTION("coefficients and right powers") {
        auto f = parse_polynomial("x1 x2^2 - 1/2 x2 x1 x2", q);
        REQUIRE(f.term_count() == 2);
        auto w1 = LeftNormedWord({1, 2, 2}).to_term();
        auto w2 = LeftNormedWord({2, 1, 2}).to_term();
        CHECK(f.terms().at(w1) == Rational(1));
        CHECK(f.terms().at(w2) == Rational(-1, 2));
    }
    SECTION("leading power binds to the first factor") {
        CHECK(parse_polynomial("x1^2 x2", q) == parse_polynomial("x1 x1 x2", q));
        CHECK(parse_polynomial("(x1 x2)^2", q) == parse_polynomial("(x1 x2)(x1 x2)", q));
    }
}

TEST_CASE("parse errors carry positions", "[term]") {
    auto expect_error = [](const std::string& text) {
        try {
            parse_polynomial(text, q);
            FAIL("expected parse error for: " << text);
        } catch (const parse_error& e) {
            CHECK(e.tag() == "parse_error");
        }
    };
    expect_error("x0");
    expect_error("x1^0");
    expect_error("x1 +");
    expect_error("(x1 x2");
    expect_error("3");
    expect_error("x1 ) x2");
    expect_error("x1 / x2");
}

TEST_CASE("free algebra operations", "[term]") {
    auto x1 = parse_polynomial("x1", q);
    CHECK((x1 - x1).is_zero());

    auto prod1 = parse_polynomial("x1 x2", q) * parse_polynomial("x3", q);
    auto w = LeftNormedWord::from_term(prod1.terms().begin()->first);
    REQUIRE(w.has_value());
    CHECK(w->letters() == std::vector<VarIndex>{1, 2, 3});

    auto prod2 = parse_polynomial("x1", q) * parse_polynomial("x2 x3", q);
    CHECK(!LeftNormedWord::from_term(prod2.terms().begin()->first).has_value());
}

TEST_CASE("multidegree inspection", "[term]") {
    auto md = multidegree_of(parse_polynomial("x1 x2 - x2 x1", q));
    REQUIRE(md.has_value());
    CHECK(md->multiplicity(1) == 1);
    CHECK(md->multiplicity(2) == 1);
    CHECK(md->is_multilinear());

    auto sq = multidegree_of(parse_polynomial("x1 x1", q));
    REQUIRE(sq.has_value());
    CHECK(sq->multiplicity(1) == 2);
    CHECK(!sq->is_multilinear());

    CHECK(!multidegree_of(parse_polynomial("x1 x2 + x1", q)).has_value());
    CHECK_THROWS_AS(multidegree_of(FreePolynomial<Rational>()), error);
}

TEST_CASE("degree additivity of the free product", "[term][property]") {
    selftest::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        auto f = FreePolynomial<Rational>::monomial(selftest::random_term(rng, 3, 1 + rng() % 4), Rational(1));
        auto g = FreePolynomial<Rational>::monomial(selftest::random_term(rng, 3, 1 + rng() % 4), Rational(1));
        CHECK((f * g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("format then parse is the identity", "[term][property]") {
    selftest::Rng rng(11);
    for (int i = 0; i < 150; ++i) {
        auto f = selftest::random_free_poly(rng, 4, 5, 4);
        CHECK(parse_polynomial(f.str(), q) == f);
    }
    // and for prime-field coefficients
    FpDomain f5(5);
    auto g = parse_polynomial("2 x1 x2 + 4 x2 x2 x1 + x3", f5);
    CHECK(parse_polynomial(g.str(), f5) == g);
}

TEST_CASE("formatting is deterministic and sorted by degree", "[term]") {
    auto f = parse_polynomial("x2 x1 x3 + x1 - 2 x2", q);
    CHECK(f.str() == "x1 - 2 x2 + x2 x1 x3");
    CHECK(parse_polynomial("x1 x1 x2 x2", q).str() == "x1^2 x2^2");
    CHECK(parse_polynomial("x1 (x2 x3)", q).str() == "x1 (x2 x3)");
}

TEST_CASE("substitution is an endomorphism of the free algebra", "[term]") {
    std::map<VarIndex, FreePolynomial<Rational>> images;
    images.emplace(1, parse_polynomial("x4 x5", q));
    images.emplace(2, parse_polynomial("x4", q));
    auto f = parse_polynomial("x1 x2", q);
    CHECK(substitute(f, images) == parse_polynomial("x4 x5 x4", q));
    CHECK_THROWS_AS(substitute(parse_polynomial("x3", q), images), error);
}
