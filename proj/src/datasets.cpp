#include "vmap/datasets.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "builtin_data.hpp"

namespace vmap {

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& entry : builtin_data()) out.emplace_back(entry.name);
    return out;
}

Dataset builtin(const std::string& name) {
    for (const auto& entry : builtin_data()) {
        if (entry.name != name) continue;
        const auto j = nlohmann::json::parse(entry.json);
        return {name, load_graph(j), j.value("note", "")};
    }
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

std::vector<PartitionItem> lognormal_points(std::size_t n, Rng& rng) {
    if (n == 0) throw std::invalid_argument("need at least one point");
    std::lognormal_distribution<double> weight(0.0, 1.0);
    std::vector<PartitionItem> items(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        items[i].id = i;
        items[i].order = i;
        items[i].weight = weight(rng);
        items[i].pos.x = uniform01(rng);
        items[i].pos.y = uniform01(rng);
        total += items[i].weight;
    }
    for (auto& item : items) item.weight /= total;
    return items;
}

}  // namespace vmap
