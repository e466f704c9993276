#include <doctest.h>

#include "greengrade/hm.hpp"

#include <random>

using namespace greengrade;

namespace {

HmElement random_element(std::mt19937_64& rng, int m, Field f = Field::rationals()) {
    std::vector<Scalar> c;
    for (int i = 0; i < m; ++i) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 9);
        if (i == 0 && num == 0)
            num = 1;
        c.push_back(Scalar(mpq_class(num, den), f));
    }
    return hm_element(std::move(c));
}

HmElement make(std::initializer_list<long> coords) {
    std::vector<Scalar> c;
    for (long x : coords)
        c.push_back(Scalar(x));
    return hm_element(std::move(c));
}

} // namespace

TEST_CASE("the m = 3 product formula") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const HmElement b = random_element(rng, 3);
        const HmElement a = random_element(rng, 3);
        const HmElement p = hm_mul(b, a);
        const Scalar b1 = b.a[0], b2 = b.a[1], b3 = b.a[2];
        const Scalar a1 = a.a[0], a2 = a.a[1], a3 = a.a[2];
        CHECK(p.a[0] == a1 * b1);
        CHECK(p.a[1] == a1 * b2 + a2 * b1 * b1);
        CHECK(p.a[2] == a1 * b3 + Scalar(2) * a2 * b1 * b2 + a3 * b1 * b1 * b1);
    }
}

TEST_CASE("identity element acts trivially on both sides") {
    std::mt19937_64 rng(5);
    for (int m = 1; m <= 6; ++m) {
        const HmElement id = hm_identity(m);
        for (int trial = 0; trial < 20; ++trial) {
            const HmElement a = random_element(rng, m);
            CHECK(hm_mul(id, a) == a);
            CHECK(hm_mul(a, id) == a);
        }
    }
}

TEST_CASE("worked product: m = 2, b = (2,1), a = (3,5) gives (6,23)") {
    CHECK(hm_mul(make({2, 1}), make({3, 5})) == make({6, 23}));
    // the same composite through the polynomial oracle: f = (3,5) after g = (2,1)
    CHECK(hm_oracle_compose(make({3, 5}), make({2, 1})) == make({6, 23}));
}

TEST_CASE("inverses: diagonal case and the m = 2 closed form") {
    HmElement d = make({7, 0, 0});
    const HmElement dinv = hm_inv(d);
    CHECK(dinv.a[0] == Scalar(7).inverse());
    CHECK(dinv.a[1].is_zero());
    CHECK(dinv.a[2].is_zero());

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const HmElement b = random_element(rng, 2);
        const HmElement inv = hm_inv(b);
        const Scalar b1 = b.a[0], b2 = b.a[1];
        CHECK(inv.a[0] == b1.inverse());
        CHECK(inv.a[1] == -(b2 * b1.inverse() * b1.inverse() * b1.inverse()));
    }
}

TEST_CASE("two-sided inverses for random elements up to m = 6") {
    std::mt19937_64 rng(23);
    for (int m = 1; m <= 6; ++m)
        for (int trial = 0; trial < 15; ++trial) {
            const HmElement a = random_element(rng, m);
            const HmElement inv = hm_inv(a);
            CHECK(hm_mul(inv, a) == hm_identity(m));
            CHECK(hm_mul(a, inv) == hm_identity(m));
        }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int m = 1; m <= 6; ++m)
        for (int trial = 0; trial < 170; ++trial) {
            const HmElement a = random_element(rng, m);
            const HmElement b = random_element(rng, m);
            const HmElement c = random_element(rng, m);
            CHECK(hm_mul(hm_mul(c, b), a) == hm_mul(c, hm_mul(b, a)));
            ++checked;
        }
    CHECK(checked == 1020);
}

TEST_CASE("tuple product equals the truncated-polynomial composition oracle") {
    std::mt19937_64 rng(37);
    for (int m = 1; m <= 6; ++m)
        for (int trial = 0; trial < 100; ++trial) {
            const HmElement f = random_element(rng, m);
            const HmElement g = random_element(rng, m);
            // f(g(x)) corresponds to the product g * f
            CHECK(hm_oracle_compose(f, g) == hm_mul(g, f));
        }
}

TEST_CASE("oracle with the identity map") {
    std::mt19937_64 rng(41);
    const HmElement id = hm_identity(4);
    for (int trial = 0; trial < 20; ++trial) {
        const HmElement g = random_element(rng, 4);
        CHECK(hm_oracle_compose(id, g) == g);
        CHECK(hm_oracle_compose(g, id) == g);
    }
}

TEST_CASE("L is a normal subgroup; K parts multiply") {
    std::mt19937_64 rng(43);
    for (int m = 2; m <= 5; ++m)
        for (int trial = 0; trial < 50; ++trial) {
            HmElement l = random_element(rng, m);
            l.a[0] = Scalar::one(); // force into L
            const HmElement g = random_element(rng, m);
            const HmElement conj = hm_mul(hm_mul(hm_inv(g), l), g);
            CHECK(conj.a[0] == Scalar::one());

            const HmElement a = random_element(rng, m);
            const HmElement b = random_element(rng, m);
            const HmElement prod = hm_mul(b, a);
            CHECK(hm_decompose(prod).torus ==
                  hm_mul(hm_decompose(b).torus, hm_decompose(a).torus));
        }
}

TEST_CASE("decomposition: unipotent * torus recombines exactly") {
    std::mt19937_64 rng(47);
    for (int m = 1; m <= 5; ++m)
        for (int trial = 0; trial < 30; ++trial) {
            const HmElement a = random_element(rng, m);
            const HmDecomposition dec = hm_decompose(a);
            CHECK(dec.torus.a[0] == a.a[0]);
            for (int i = 1; i < m; ++i)
                CHECK(dec.torus.a[i].is_zero());
            CHECK(dec.unipotent.a[0] == Scalar::one());
            CHECK(hm_mul(dec.unipotent, dec.torus) == a);

            const HmDecomposition alt = hm_decompose_torus_first(a);
            CHECK(hm_mul(alt.torus, alt.unipotent) == a);
        }
}

TEST_CASE("decomposition of pure factors") {
    const HmElement torus = make({5, 0, 0});
    const auto d1 = hm_decompose(torus);
    CHECK(d1.torus == torus);
    CHECK(d1.unipotent == hm_identity(3));

    const HmElement unip = make({1, 4, -2});
    const auto d2 = hm_decompose(unip);
    CHECK(d2.unipotent == unip);
    CHECK(d2.torus == hm_identity(3));

    // worked m = 2 example: (2,6) = L-part (1,3) times K-part (2,0)
    const auto d3 = hm_decompose(make({2, 6}));
    CHECK(d3.torus == make({2, 0}));
    CHECK(d3.unipotent == make({1, 3}));
    CHECK(hm_mul(d3.unipotent, d3.torus) == make({2, 6}));
}

TEST_CASE("prime-field arithmetic works throughout") {
    const Field f = Field::prime(kDefaultPrime);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const HmElement a = random_element(rng, 4, f);
        const HmElement b = random_element(rng, 4, f);
        CHECK(hm_mul(hm_inv(a), a) == hm_identity(4, f));
        CHECK(hm_oracle_compose(a, b) == hm_mul(b, a));
    }
}

TEST_CASE("invalid elements are rejected") {
    CHECK_THROWS_AS(hm_element({Scalar(0), Scalar(1)}), std::invalid_argument);
    CHECK_THROWS_AS(hm_mul(make({1, 0}), make({1, 0, 0})), std::invalid_argument);
}
