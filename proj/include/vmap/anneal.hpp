#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "vmap/geometry.hpp"
#include "vmap/graph.hpp"
#include "vmap/metrics.hpp"
#include "vmap/partition.hpp"

namespace vmap {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Seed of the k-th independent chain derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k);

inline constexpr double kWeightClip = 64.0;
inline constexpr double kRatioMax = 64.0;

/// The annealing state: perturbed weights, embedding positions, perturbed ratio.
struct LayoutConfiguration {
    std::vector<double> weights;
    std::vector<Point> positions;
    double ratio = 1.0;
};

struct AnnealParams {
    std::size_t stages = 2048;      // ns
    std::size_t iterations = 0;     // ni; 0 selects max(1, |V|)
    double t_upper = 256.0;
    double t_lower = 0.0;           // 0 selects sqrt(min alpha / r) / 128
    CostWeights weights;
    bool weight_perturbation = true;
    std::uint64_t seed = 1;
    double ratio = 1.5;             // user target r
    Rect display{0.0, 0.0, 1200.0, 800.0};
    std::array<double, 3> heuristics{1.0, 1.0, 1.0};  // random, attraction, repulsion
    bool record_trace = false;

    void validate() const;  // throws std::invalid_argument
};

/// gamma with t_upper * gamma^ns == t_lower.
double cooling_schedule(std::size_t ns, double t_upper, double t_lower);
double lower_temperature(double min_alpha, double r);
double stage_temperature(double t_upper, double gamma, std::size_t stage);

/// Everything an evaluation needs besides the configuration.
struct AnnealProblem {
    const Graph* graph = nullptr;
    std::vector<double> alpha;           // original proportions
    std::vector<double> original_weights;
    std::vector<std::size_t> clusters;
    Rect display;
    double user_ratio = 1.5;
    CostWeights weights;
    double eps = 0.0;
    std::array<double, 3> heuristics{1.0, 1.0, 1.0};

    AnnealProblem(const Graph& g, const AnnealParams& params);
};

struct Evaluation {
    MetricsReport report;
    PartitionTree tree;
    std::vector<Edge> contacts;
};

Evaluation evaluate(const LayoutConfiguration& sigma, const AnnealProblem& problem);

/// Moves one random vertex; `contacts` are the current layout's adjacencies.
LayoutConfiguration perturb_position(const LayoutConfiguration& sigma, const AnnealProblem& problem,
                                     const std::vector<Edge>& contacts, double t, Rng& rng);
/// Magnifies or contracts one random vertex weight by (1 + t).
LayoutConfiguration perturb_weight(const LayoutConfiguration& sigma, const AnnealProblem& problem, double t,
                                   Rng& rng);
LayoutConfiguration perturb_ratio(const LayoutConfiguration& sigma, double t, Rng& rng);

/// Min-max normalization per axis; a degenerate axis maps to 0.5.
void normalize_positions(std::vector<Point>& positions);

bool accept(double cost_old, double cost_new, double t, Rng& rng);

enum class Action { Position, Weight, Ratio };
const char* action_name(Action a);

struct TraceRecord {
    int phase = 0;  // 0 main, 1 fine-tune
    std::size_t stage = 0;
    std::size_t iteration = 0;
    Action action = Action::Position;
    bool accepted = false;
    double temperature = 0.0;
    MetricsReport candidate;
    double current_cost = 0.0;
    double best_cost = 0.0;
};

nlohmann::json to_json(const TraceRecord& r);

struct OptimizeResult {
    LayoutConfiguration best;
    Evaluation evaluation;
    std::vector<TraceRecord> trace;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
};

/// Initial configuration: original weights, user ratio, seed positions where
/// given (normalized) and uniform random positions elsewhere.
LayoutConfiguration initial_configuration(const AnnealProblem& problem,
                                          const std::vector<std::optional<Point>>& seed_positions, Rng& rng);

OptimizeResult optimize(const Graph& graph, const AnnealParams& params,
                        const std::vector<std::optional<Point>>& seed_positions = {});

/// Independent chains, one per seed, run in parallel; results keep seed order.
std::vector<OptimizeResult> optimize_restarts(const Graph& graph, const AnnealParams& params,
                                              const std::vector<std::uint64_t>& seeds,
                                              const std::vector<std::optional<Point>>& seed_positions = {});

/// Index of the lowest total cost (first on ties).
std::size_t best_result(const std::vector<OptimizeResult>& results);

}  // namespace vmap
