#include <catch2/catch.hpp>

#include <set>

#include "../support/qlinalg.hpp"
#include "nullfil/enumerate.hpp"
#include "nullfil/oracle.hpp"
#include "nullfil/rewrite.hpp"
#include "nullfil/selftest.hpp"

using namespace nullfil;

namespace {
std::vector<VarIndex> letters_of(const LeftNormedWord& w) { return w.letters(); }
}

TEST_CASE("basis catalogs for small parameters", "[enumerate]") {
    SECTION("n = 2, m = 2") {
        auto cat = basis_monomials(2, 2);
        REQUIRE(cat.by_degree.at(1).size() == 2);
        auto deg2 = cat.by_degree.at(2);
        REQUIRE(deg2.size() == 3);
        CHECK(letters_of(deg2[0]) == std::vector<VarIndex>{1, 1});
        CHECK(letters_of(deg2[1]) == std::vector<VarIndex>{1, 2});
        CHECK(letters_of(deg2[2]) == std::vector<VarIndex>{2, 2});
        CHECK(cat.word_count() == 5);
        CHECK(cat.total() == 6);
    }
    SECTION("n = 3, m = 2 has layer sizes 2, 4, 4") {
        auto cat = basis_monomials(3, 2);
        CHECK(cat.by_degree.at(1).size() == 2);
        CHECK(cat.by_degree.at(2).size() == 4);
        CHECK(cat.by_degree.at(3).size() == 4);
        CHECK(cat.total() == 11);
    }
    SECTION("n = 1 has no products") {
        auto cat = basis_monomials(1, 3);
        CHECK(cat.by_degree.size() == 1);
        CHECK(cat.by_degree.at(1).size() == 3);
        CHECK(cat.total() == 4);
    }
}

TEST_CASE("catalog words are canonical and distinct", "[enumerate]") {
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            auto cat = basis_monomials(n, m);
            std::set<std::vector<VarIndex>> seen;
            AlgebraHandle alg = AlgebraHandle::finite(n);
            for (const auto& [s, ws] : cat.by_degree) {
                for (const auto& w : ws) {
                    CHECK(w.length() == s);
                    CHECK(detail::canonical_word(w, alg) == w);
                    CHECK(seen.insert(w.letters()).second);
                }
            }
        }
    }
}

TEST_CASE("dimension formula", "[enumerate]") {
    CHECK(dim_relatively_free(2, 1) == 3);
    CHECK(dim_relatively_free(2, 2) == 6);
    CHECK(dim_relatively_free(3, 2) == 11);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= 4; ++m)
            CHECK(dim_relatively_free(n, m) == BigInt(1 + basis_monomials(n, m).word_count()));
}

TEST_CASE("dimension grows with both parameters", "[enumerate][property]") {
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= 4; ++m) {
            if (n > 1) CHECK(dim_relatively_free(n - 1, m) <= dim_relatively_free(n, m));
            if (m > 1) CHECK(dim_relatively_free(n, m - 1) <= dim_relatively_free(n, m));
        }
}

TEST_CASE("multilinear codimensions", "[enumerate]") {
    AlgebraHandle inf = AlgebraHandle::infinite();
    CHECK(multilinear_codim(inf, 5) == 5);
    CHECK(multilinear_codim(AlgebraHandle::finite(4), 4) == 1);
    CHECK(multilinear_codim(AlgebraHandle::finite(4), 6) == 0);
    CHECK(multilinear_codim(AlgebraHandle::finite(1), 1) == 1);

    // the multilinear slice of the catalog matches the codimension
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned m = 1; m <= 4; ++m) {
            unsigned slice = 0;
            auto cat = basis_monomials(n, m);
            auto it = cat.by_degree.find(m);
            if (it != cat.by_degree.end())
                for (const auto& w : it->second)
                    if (w.multidegree().is_multilinear()) ++slice;
            CHECK(slice == multilinear_codim(AlgebraHandle::finite(n), m));
        }
    }
}

TEST_CASE("canonical words are linearly independent", "[enumerate][slow]") {
    // The generic-evaluation coordinate vectors of the catalog words have
    // full rank over the rationals.
    for (unsigned n = 2; n <= 4; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            auto cat = basis_monomials(n, m);
            std::vector<LeftNormedWord> all;
            for (const auto& [s, ws] : cat.by_degree) all.insert(all.end(), ws.begin(), ws.end());

            std::map<std::pair<unsigned, CommPoly::Monomial>, std::size_t> columns;
            std::vector<std::vector<std::pair<std::pair<unsigned, CommPoly::Monomial>, Rational>>> sparse;
            for (const auto& w : all) {
                auto coords = generic_evaluate(selftest::word_poly(w.letters()), m, n);
                std::vector<std::pair<std::pair<unsigned, CommPoly::Monomial>, Rational>> row;
                for (unsigned i = 0; i < n; ++i)
                    for (const auto& [mono, c] : coords[i].terms()) {
                        auto key = std::make_pair(i, mono);
                        columns.emplace(key, columns.size());
                        row.emplace_back(key, c);
                    }
                sparse.push_back(std::move(row));
            }
            std::vector<std::vector<Rational>> rows(all.size(),
                                                    std::vector<Rational>(columns.size(), Rational()));
            for (std::size_t r = 0; r < sparse.size(); ++r)
                for (const auto& [key, c] : sparse[r]) rows[r][columns.at(key)] = c;
            CHECK(testsupport::rank_over_q(rows) == all.size());
        }
    }
}
