#pragma once

#include "greengrade/tree.hpp"

#include <cstdint>

namespace greengrade {

/// Seeded random Brauer tree: edges attached one by one to a uniformly
/// random existing vertex, inserted at a random slot of its rotation list;
/// random exceptional vertex and multiplicity in [1, max_multiplicity].
/// Deterministic for a fixed seed.
BrauerTree random_tree(std::uint64_t seed, int num_edges, int max_multiplicity);

} // namespace greengrade
