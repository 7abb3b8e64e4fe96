#include <catch2/catch.hpp>

#include "nullfil/scalar.hpp"

using namespace nullfil;

TEST_CASE("rationals stay canonical", "[scalar]") {
    Rational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.str() == "-3/2");

    Rational z = q - q;
    CHECK(z.is_zero());
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);

    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
    CHECK((Rational(-4) / Rational(6)).str() == "-2/3");
    CHECK(Rational(2).pow(5) == Rational(32));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
}

TEST_CASE("rational division by zero is an error", "[scalar]") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), error);
    try {
        Rational(3) / Rational(0);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.tag() == "division_by_zero");
    }
}

TEST_CASE("prime field arithmetic", "[scalar]") {
    Fp a(3, 5), b(4, 5);
    CHECK((a + b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK((a * b).residue() == 2);
    CHECK((-a).residue() == 2);
    CHECK((a / b).residue() == 2);  // 3 * inverse(4) = 3 * 4 = 12 = 2
    CHECK(a.inverse().residue() == 2);
    CHECK(a.pow(4).is_one());
    CHECK(Fp::from_signed(-7, 5).residue() == 3);

    CHECK_THROWS_AS(Fp(0, 5).inverse(), error);
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), error);
    try {
        Fp(1, 5) * Fp(1, 7);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.tag() == "modulus_mismatch");
    }
}

TEST_CASE("field domains validate their parameters", "[scalar]") {
    FpDomain f7(7);
    CHECK(f7.from_integer(BigInt(-1)).residue() == 6);
    CHECK(f7.from_ratio(BigInt(1), BigInt(2)).residue() == 4);
    CHECK_THROWS_AS(FpDomain(6), error);
    CHECK_THROWS_AS(f7.from_ratio(BigInt(1), BigInt(14)), error);

    RationalDomain q;
    CHECK(q.from_ratio(BigInt(9), BigInt(-6)) == Rational(-3, 2));
}

TEST_CASE("random rational expressions keep the canonical form", "[scalar]") {
    std::uint64_t state = 99;
    auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
    for (int i = 0; i < 200; ++i) {
        long long a = static_cast<long long>(next() % 19) - 9;
        long long b = static_cast<long long>(next() % 9) + 1;
        Rational r = Rational(a) / Rational(b);
        r = r * Rational(7, 3) - Rational(5, 6);
        CHECK(r.denominator() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()), r.denominator()) == 1);
        if (r.is_zero()) CHECK(r.denominator() == 1);
    }
}
