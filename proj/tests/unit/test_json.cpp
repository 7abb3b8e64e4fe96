#include <catch2/catch.hpp>

#include "nullfil/json_io.hpp"
#include "nullfil/parse.hpp"

using namespace nullfil;

namespace {
const RationalDomain q;
}

TEST_CASE("element JSON round trips", "[json]") {
    AlgebraHandle F4 = AlgebraHandle::finite(4);
    auto u = parse_element("e1 + 2/5*e3", q, F4);
    json j = to_json(u);
    CHECK(j.dump() == R"({"algebra":{"n":4},"coeffs":{"1":"1","3":"2/5"}})");
    CHECK(element_from_json(json::parse(j.dump()), q) == u);

    auto v = parse_element("-1/2*e2 + 7*e9", q, AlgebraHandle::infinite());
    json ji = to_json(v);
    CHECK(ji["algebra"] == json("inf"));
    CHECK(element_from_json(json::parse(ji.dump()), q) == v);

    FpDomain f5(5);
    auto w = parse_element("2*e1 + 3*e2", f5, F4);
    CHECK(element_from_json(json::parse(to_json(w).dump()), f5) == w);
}

TEST_CASE("descriptor JSON matches the documented schema", "[json]") {
    AlgebraHandle F3 = AlgebraHandle::finite(3);
    CHECK(to_json(ImageDescriptor::zero(F3)).dump() == R"({"kind":"zero"})");
    CHECK(to_json(ImageDescriptor::power_ideal(F3, 3)).dump() == R"({"kind":"power_ideal","k":3})");
    CHECK(to_json(ImageDescriptor::punctured_cone(F3, 2)).dump() ==
          R"({"kind":"punctured_cone","d":2,"closure_required":true})");

    for (auto desc : {ImageDescriptor::zero(F3), ImageDescriptor::power_ideal(F3, 2),
                      ImageDescriptor::punctured_cone(F3, 2)}) {
        auto back = descriptor_from_json(json::parse(to_json(desc).dump()), F3);
        CHECK(back.kind == desc.kind);
        CHECK(back.index == desc.index);
    }
}

TEST_CASE("catalog JSON", "[json]") {
    json j = to_json(basis_monomials(3, 2));
    CHECK(j.dump() == R"({"n":3,"m":2,"by_degree":{"1":2,"2":4,"3":4},"unit":1,"total":11})");
    json with_words = to_json(basis_monomials(2, 2), true);
    CHECK(with_words["words"]["2"] == json::array({"x1^2", "x1 x2", "x2^2"}));
}

TEST_CASE("cross-check report JSON", "[json]") {
    auto rep = cross_check(parse_polynomial("x1 x2 - x2 x1", q), 3, 3);
    json j = to_json(rep);
    CHECK(j["f"] == "x1 x2 - x2 x1");
    CHECK(j["n"] == 3);
    CHECK(j["p"] == 3);
    CHECK(j["descriptor"] == json::parse(R"({"kind":"power_ideal","k":3})"));
    CHECK(j["inclusion"] == true);
    CHECK(j["equality"] == "exact");
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("scalar strings", "[json]") {
    CHECK(scalar_from_string("-3/2", q) == Rational(-3, 2));
    CHECK(scalar_from_string("7", q) == Rational(7));
    FpDomain f7(7);
    CHECK(scalar_from_string("1/2", f7) == Fp(4, 7));
}
