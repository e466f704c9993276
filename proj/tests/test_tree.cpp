#include <doctest.h>

#include "greengrade/random_tree.hpp"
#include "greengrade/tree.hpp"

#include "corpus.hpp"

#include <algorithm>

using namespace greengrade;

namespace {

bool cyclically_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    const int r = static_cast<int>(a.size());
    for (int s = 0; s < r; ++s) {
        bool eq = true;
        for (int k = 0; k < r; ++k)
            if (a[k] != b[(k + s) % r])
                eq = false;
        if (eq)
            return true;
    }
    return false;
}

bool same_up_to_rotation(const BrauerTree& a, const BrauerTree& b) {
    if (a.multiplicity != b.multiplicity || a.exceptional != b.exceptional)
        return false;
    if (a.edges != b.edges && [&] {
            // endpoints are unordered
            for (const auto& [eid, ends] : a.edges) {
                auto it = b.edges.find(eid);
                if (it == b.edges.end())
                    return true;
                if (ends != it->second &&
                    std::make_pair(ends.second, ends.first) != it->second)
                    return true;
            }
            return a.edges.size() != b.edges.size();
        }())
        return false;
    if (a.rotation.size() != b.rotation.size())
        return false;
    for (const auto& [v, rot] : a.rotation) {
        auto it = b.rotation.find(v);
        if (it == b.rotation.end() || !cyclically_equal(rot, it->second))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("parse accepts the 6-edge worked example") {
    const std::string doc = serialize_tree(example6_tree());
    const BrauerTree t = parse_tree(doc);
    CHECK(t.e() == 6);
    CHECK(t.multiplicity == 1);
    CHECK(t.exceptional == "c");
}

TEST_CASE("single edge with multiplicity 3 is accepted") {
    BrauerTree t = star_tree(3, 1);
    CHECK(t.e() == 1);
    CHECK(t.multiplicity == 3);
}

TEST_CASE("two disjoint edges are rejected as not connected") {
    const std::string doc = R"({
        "multiplicity": 1, "exceptional": "a",
        "vertices": {"a": ["E1"], "b": ["E1"], "c": ["E2"], "d": ["E2"]},
        "edges": {"E1": ["a", "b"], "E2": ["c", "d"]}
    })";
    CHECK_THROWS_WITH_AS(parse_tree(doc), "not connected", std::invalid_argument);
}

TEST_CASE("distinct diagnostics for malformed input") {
    CHECK_THROWS_WITH_AS(parse_tree("{"),
                         doctest::Contains("malformed tree document"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_tree(R"({"multiplicity": 0, "exceptional": "a",
                       "vertices": {"a": ["E1"], "b": ["E1"]}, "edges": {"E1": ["a","b"]}})"),
        "multiplicity must be >= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_tree(R"({"multiplicity": 1, "exceptional": "zz",
                       "vertices": {"a": ["E1"], "b": ["E1"]}, "edges": {"E1": ["a","b"]}})"),
        "unknown exceptional vertex: zz", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_tree(R"({"multiplicity": 1, "exceptional": "a",
                       "vertices": {"a": ["E1", "E9"], "b": ["E1"]}, "edges": {"E1": ["a","b"]}})"),
        "dangling edge id in rotation: E9", std::invalid_argument);
}

TEST_CASE("star constructor and parse/serialize round trip") {
    for (auto [m, e] : {std::pair{1, 6}, {2, 1}, {3, 4}}) {
        const BrauerTree t = star_tree(m, e);
        CHECK(t.e() == e);
        CHECK(same_up_to_rotation(t, parse_tree(serialize_tree(t))));
    }
}

TEST_CASE("round trip on random trees") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const BrauerTree t = random_tree(seed, 1 + static_cast<int>(seed % 9), 3);
        CHECK(same_up_to_rotation(t, parse_tree(serialize_tree(t))));
    }
}

TEST_CASE("distances on the 6-edge example") {
    const BrauerTree t = example6_tree();
    const EdgeDistance d = distances(t);
    CHECK(d.delta.at("S1") == 1);
    CHECK(d.delta.at("S2") == 1);
    CHECK(d.delta.at("S3") == 1);
    CHECK(d.delta.at("S4") == 2);
    CHECK(d.delta.at("S5") == 2);
    CHECK(d.delta.at("S6") == 3);
    CHECK(d.predecessor.at("S4") == "S3");
    CHECK(d.predecessor.at("S5") == "S3");
    CHECK(d.predecessor.at("S6") == "S5");
    CHECK(d.predecessor.count("S1") == 0);
}

TEST_CASE("distances: star has all delta = 1, 11-edge example depths") {
    const EdgeDistance ds = distances(star_tree(2, 5));
    for (const auto& [eid, delta] : ds.delta)
        CHECK(delta == 1);

    const EdgeDistance d11 = distances(example11_tree());
    CHECK(d11.delta.at("S7") == 3);
    CHECK(d11.delta.at("S11") == 3);
    CHECK(d11.delta.at("S5") == 3);
    CHECK(d11.delta.at("S1") == 1);
}

TEST_CASE("delta increases by one along root-to-leaf paths") {
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        const BrauerTree t = random_tree(seed, 9, 2);
        const EdgeDistance d = distances(t);
        int adjacent = 0;
        for (const auto& [eid, delta] : d.delta) {
            if (delta == 1) {
                ++adjacent;
                const auto& [x, y] = t.edges.at(eid);
                CHECK((x == t.exceptional || y == t.exceptional));
            } else {
                CHECK(d.delta.at(d.predecessor.at(eid)) == delta - 1);
            }
        }
        CHECK(adjacent == static_cast<int>(t.rotation.at(t.exceptional).size()));
    }
}
