#include "greengrade/random_tree.hpp"

#include <random>
#include <stdexcept>

namespace greengrade {

BrauerTree random_tree(std::uint64_t seed, int num_edges, int max_multiplicity) {
    if (num_edges < 1 || max_multiplicity < 1)
        throw std::invalid_argument("random_tree needs num_edges >= 1 and max_multiplicity >= 1");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    BrauerTree t;
    std::vector<std::string> vertices{"v0"};
    t.rotation["v0"] = {};
    for (int k = 1; k <= num_edges; ++k) {
        const std::string parent = vertices[pick(static_cast<int>(vertices.size()))];
        const std::string child = "v" + std::to_string(k);
        const std::string eid = "E" + std::to_string(k);
        auto& rot = t.rotation[parent];
        rot.insert(rot.begin() + pick(static_cast<int>(rot.size()) + 1), eid);
        t.rotation[child] = {eid};
        t.edges[eid] = {parent, child};
        vertices.push_back(child);
    }
    t.exceptional = vertices[pick(static_cast<int>(vertices.size()))];
    t.multiplicity = 1 + pick(max_multiplicity);
    t.validate();
    return t;
}

} // namespace greengrade
