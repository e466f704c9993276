#include <doctest.h>

#include "greengrade/cartan.hpp"
#include "greengrade/random_tree.hpp"

#include "corpus.hpp"

using namespace greengrade;

namespace {

LaurentPoly qp(long e, long c = 1) { return LaurentPoly::q_power(e, c); }

std::pair<GradedQuiver, RelationSet> graded_with_relations(const BrauerTree& t) {
    const GreenNumbering n = green_number(t);
    auto [q, rel] = build_quiver(t, n);
    return {assign_degrees(q, n, t.multiplicity), rel};
}

} // namespace

TEST_CASE("closed form for the Brauer line") {
    for (auto [m, e] : {std::pair{1, 4}, {2, 3}, {3, 5}}) {
        auto [g, rel] = graded_with_relations(line_tree(m, e));
        const auto C = cartan_closed_form(g);
        LaurentPoly c11;
        for (int k = 0; k <= m; ++k)
            c11 += qp(static_cast<long>(k) * e);
        CHECK(C.at(0, 0) == c11);
        for (int i = 1; i < e; ++i) {
            CHECK(C.at(i, i) == LaurentPoly(1) + qp(static_cast<long>(m) * e));
            CHECK(C.at(i - 1, i) == qp(static_cast<long>(m) * e));
            CHECK(C.at(i, i - 1) == LaurentPoly(1));
        }
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                if (std::abs(i - j) > 1)
                    CHECK(C.at(i, j).is_zero());
    }
}

TEST_CASE("star (1,2): the 2x2 matrix of the two-cycle quiver") {
    auto [g, rel] = graded_with_relations(star_tree(1, 2));
    const auto C = cartan_closed_form(g);
    CHECK(C.at(0, 0) == LaurentPoly(1) + qp(2));
    CHECK(C.at(1, 1) == LaurentPoly(1) + qp(2));
    CHECK(C.at(0, 1) == qp(1));
    CHECK(C.at(1, 0) == qp(1));
    CHECK(cartan_from_paths(g, rel) == C);
}

TEST_CASE("entries vanish exactly off shared cycles") {
    auto [g, rel] = graded_with_relations(example6_tree());
    const auto C = cartan_closed_form(g);
    CHECK(C.at(0, 3).is_zero()); // S1, S4 share no vertex
    CHECK(C.at(3, 0).is_zero());
    CHECK(C.at(0, 5).is_zero());
    // spec'd entries of the 6-edge example
    CHECK(C.at(4, 3) == LaurentPoly(1)); // (S5, S4): i > j on a non-exceptional cycle
    CHECK(C.at(3, 4) == qp(6));          // (S4, S5): q^{me}
    CHECK(C.at(0, 2) == qp(4));          // (S1, S3): q^{e-2}
}

TEST_CASE("path enumeration equals the closed form across the corpus") {
    for (const BrauerTree& t : {example6_tree(), example11_tree(), line_tree(2, 4),
                                star_tree(3, 4), star_tree(2, 1), star_tree(1, 1)}) {
        auto [g, rel] = graded_with_relations(t);
        CHECK(cartan_from_paths(g, rel) == cartan_closed_form(g));
    }
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        auto [g, rel] = graded_with_relations(random_tree(seed, 1 + static_cast<int>(seed % 9), 3));
        CHECK(cartan_from_paths(g, rel) == cartan_closed_form(g));
    }
}

TEST_CASE("determinant identity for small types") {
    // (1,2) line: 1 + q^2 + q^4
    {
        auto [g, rel] = graded_with_relations(line_tree(1, 2));
        CHECK(cartan_determinant(cartan_closed_form(g)) ==
              LaurentPoly(1) + qp(2) + qp(4));
    }
    // (1,3) star: 1 + q^3 + q^6 + q^9
    {
        auto [g, rel] = graded_with_relations(star_tree(1, 3));
        CHECK(cartan_determinant(cartan_closed_form(g)) ==
              LaurentPoly(1) + qp(3) + qp(6) + qp(9));
    }
}

TEST_CASE("determinant depends only on the type, not the tree shape") {
    // every tree of type (2,3): 1 + q^3 + ... + q^18
    const LaurentPoly expect = cartan_determinant_closed_form(2, 3);
    for (std::uint64_t seed = 400; seed < 420; ++seed) {
        BrauerTree t = random_tree(seed, 3, 1);
        t.multiplicity = 2;
        auto [g, rel] = graded_with_relations(t);
        CHECK(cartan_determinant(cartan_closed_form(g)) == expect);
    }
    CHECK(expect.max_exp() == 18);
    CHECK(expect.coeff(0) == 1);
}

TEST_CASE("determinant identity and support bound on random trees") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
        const BrauerTree t = random_tree(seed, 1 + static_cast<int>(seed % 8), 3);
        auto [g, rel] = graded_with_relations(t);
        const auto C = cartan_closed_form(g);
        const int e = g.e;
        const long me = static_cast<long>(g.multiplicity) * e;
        CHECK(cartan_determinant(C) == cartan_determinant_closed_form(g.multiplicity, e));
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j) {
                const LaurentPoly& entry = C.at(i, j);
                if (!entry.is_zero()) {
                    CHECK(entry.min_exp() >= 0);
                    CHECK(entry.max_exp() <= me);
                    for (const auto& [exp, coeff] : entry.coeffs())
                        CHECK(coeff > 0);
                }
            }
    }
}
