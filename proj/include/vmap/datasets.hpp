#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vmap/anneal.hpp"
#include "vmap/graph.hpp"
#include "vmap/partition.hpp"

namespace vmap {

struct Dataset {
    std::string name;
    GraphDocument document;
    std::string note;
};

std::vector<std::string> builtin_names();
/// Throws std::invalid_argument for an unknown name.
Dataset builtin(const std::string& name);

/// n items with lognormal(0, 1) weights normalized to proportions and
/// uniform positions in [0, 1)^2.
std::vector<PartitionItem> lognormal_points(std::size_t n, Rng& rng);

}  // namespace vmap
