#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vmap/anneal.hpp"
#include "vmap/border.hpp"
#include "vmap/graph.hpp"
#include "vmap/layout_document.hpp"

namespace vmap {

struct PipelineConfig {
    AnnealParams anneal;
    std::size_t restarts = 1;     // chains; chain k > 0 uses derive_seed(seed, k)
    std::optional<double> border; // explicit d; never altered
    bool precompute_ego = false;
};

/// Default border: 1% of the shorter display side.
double default_border(const Rect& display);

struct PipelineResult {
    LayoutDocument document;
    OptimizeResult optimum;
    PartitionTree raw;
    PartitionTree adjusted;
    BottomUpStats stats;
    double requested_border = 0.0;
    bool border_reduced = false;  // default border shrunk to fit small leaves
};

/// optimize -> partition -> border adjustment -> bridges -> corridor network -> document.
/// Throws BorderTooWide when an explicit border does not fit.
PipelineResult run_pipeline(const GraphDocument& input, const PipelineConfig& config);

/// Seeds of the restart chains.
std::vector<std::uint64_t> chain_seeds(std::uint64_t seed, std::size_t restarts);

}  // namespace vmap
