#include "vmap/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "vmap/router.hpp"

namespace vmap {

double default_border(const Rect& display) { return 0.01 * std::min(display.w, display.h); }

std::vector<std::uint64_t> chain_seeds(std::uint64_t seed, std::size_t restarts) {
    std::vector<std::uint64_t> seeds{seed};
    for (std::size_t k = 1; k < restarts; ++k) seeds.push_back(derive_seed(seed, k));
    return seeds;
}

PipelineResult run_pipeline(const GraphDocument& input, const PipelineConfig& config) {
    if (config.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (config.border && !(*config.border > 0.0)) throw std::invalid_argument("border must be positive");
    const Graph& graph = input.graph;

    PipelineResult out;
    auto chains = optimize_restarts(graph, config.anneal, chain_seeds(config.anneal.seed, config.restarts),
                                    input.positions);
    out.optimum = std::move(chains[best_result(chains)]);
    out.raw = out.optimum.evaluation.tree;

    out.requested_border = config.border.value_or(default_border(config.anneal.display));
    double d = out.requested_border;
    if (!border_fits(out.raw, d)) {
        if (config.border) throw BorderTooWide(0, "some leaf is narrower than four border widths");
        d = max_feasible_border(out.raw);
        out.border_reduced = true;
    }
    out.adjusted = adjust_fixed_width(out.raw, d, &out.stats);

    const auto alpha = normalize_weights(graph);
    const auto alpha_p = area_proportions(out.raw);
    const double eps = contact_tolerance(config.anneal.display);
    const auto links = bridges(out.adjusted, graph, eps);
    const auto network = build_corridor_network(out.adjusted);
    out.document = export_layout(input.name, graph, alpha, alpha_p, out.adjusted, config.anneal.ratio, links,
                                 network, out.optimum.evaluation.report);
    if (config.precompute_ego)
        for (std::size_t v = 0; v < graph.size(); ++v) out.document.ego[v] = ego_network(network, graph, v);

    const auto& a = config.anneal;
    out.document.config = {{"seed", a.seed},
                           {"restarts", config.restarts},
                           {"chosen_seed", out.optimum.seed},
                           {"ns", a.stages},
                           {"ni", a.iterations > 0 ? a.iterations : std::max<std::size_t>(1, graph.size())},
                           {"lambda", {a.weights.areal, a.weights.topological, a.weights.ratio}},
                           {"weight_perturbation", a.weight_perturbation},
                           {"requested_border", out.requested_border},
                           {"border_reduced", out.border_reduced},
                           {"bottom_up_passes", out.stats.passes}};
    return out;
}

}  // namespace vmap
