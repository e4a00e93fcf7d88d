#include "vmap/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vmap {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    // splitmix64 finalizer over master + k
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void AnnealParams::validate() const {
    if (stages < 1) throw std::invalid_argument("ns must be at least 1");
    if (!(t_upper > 0.0) || !std::isfinite(t_upper)) throw std::invalid_argument("T_ub must be positive");
    if (t_lower < 0.0 || (t_lower > 0.0 && !(t_lower < t_upper)))
        throw std::invalid_argument("T_lb must satisfy 0 < T_lb < T_ub");
    if (!(ratio >= 1.0) || !std::isfinite(ratio)) throw std::invalid_argument("ratio must be >= 1");
    if (!display.valid()) throw std::invalid_argument("display must have positive extent");
    weights.validate();
}

double cooling_schedule(std::size_t ns, double t_upper, double t_lower) {
    if (ns < 1 || !(t_lower > 0.0) || !(t_lower < t_upper))
        throw std::invalid_argument("cooling schedule needs ns >= 1 and 0 < T_lb < T_ub");
    return std::pow(t_lower / t_upper, 1.0 / static_cast<double>(ns));
}

double lower_temperature(double min_alpha, double r) { return std::sqrt(min_alpha / r) / 128.0; }

double stage_temperature(double t_upper, double gamma, std::size_t stage) {
    return t_upper * std::pow(gamma, static_cast<double>(stage));
}

AnnealProblem::AnnealProblem(const Graph& g, const AnnealParams& params)
    : graph(&g),
      alpha(normalize_weights(g)),
      display(params.display),
      user_ratio(params.ratio),
      weights(params.weights),
      eps(contact_tolerance(params.display)),
      heuristics(params.heuristics) {
    for (const auto& v : g.vertices()) {
        original_weights.push_back(v.weight);
        clusters.push_back(v.cluster);
    }
}

Evaluation evaluate(const LayoutConfiguration& sigma, const AnnealProblem& problem) {
    const auto& g = *problem.graph;
    std::vector<PartitionItem> items(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) items[i] = {i, sigma.weights[i], sigma.positions[i], i};
    Evaluation e;
    e.tree = two_level_partition(problem.display, items, problem.clusters, g.cluster_count(), sigma.ratio);
    const auto rects = e.tree.leaf_rects();
    e.report = measure(g, problem.alpha, rects, problem.user_ratio, problem.weights, problem.eps, &e.contacts);
    return e;
}

void normalize_positions(std::vector<Point>& positions) {
    if (positions.empty()) return;
    auto [xlo, xhi] = std::minmax_element(positions.begin(), positions.end(),
                                          [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [ylo, yhi] = std::minmax_element(positions.begin(), positions.end(),
                                          [](const Point& a, const Point& b) { return a.y < b.y; });
    const double x0 = xlo->x, xs = xhi->x - xlo->x;
    const double y0 = ylo->y, ys = yhi->y - ylo->y;
    for (auto& p : positions) {
        p.x = xs > 0.0 ? (p.x - x0) / xs : 0.5;
        p.y = ys > 0.0 ? (p.y - y0) / ys : 0.5;
    }
}

namespace {

Point unit(Point v) {
    const double len = std::hypot(v.x, v.y);
    return len > 0.0 ? Point{v.x / len, v.y / len} : Point{0.0, 0.0};
}

std::size_t pick(std::size_t n, Rng& rng) {
    return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
}

}  // namespace

LayoutConfiguration perturb_position(const LayoutConfiguration& sigma, const AnnealProblem& problem,
                                     const std::vector<Edge>& contacts, double t, Rng& rng) {
    const auto& g = *problem.graph;
    LayoutConfiguration out = sigma;
    const std::size_t i = pick(g.size(), rng);
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    const Point pi = sigma.positions[i];

    const Point random{t * std::cos(angle), t * std::sin(angle)};

    std::vector<std::size_t> touching;
    for (const auto& [a, b] : contacts) {
        if (a == i) touching.push_back(b);
        if (b == i) touching.push_back(a);
    }
    std::sort(touching.begin(), touching.end());

    double total = 0.0;
    for (double w : sigma.weights) total += w;
    const double near = 0.5 * std::sqrt(sigma.weights[i] / total);

    Point pull{0.0, 0.0};
    for (auto j : g.neighbors(i)) {
        if (std::binary_search(touching.begin(), touching.end(), j)) continue;  // not lost
        const Point dv{sigma.positions[j].x - pi.x, sigma.positions[j].y - pi.y};
        const double dist = std::hypot(dv.x, dv.y);
        if (dist < near || dist == 0.0) continue;
        pull.x += dv.x / dist;
        pull.y += dv.y / dist;
    }
    Point push{0.0, 0.0};
    for (auto j : touching) {
        if (g.has_edge(i, j)) continue;  // not fake
        const Point dv{pi.x - sigma.positions[j].x, pi.y - sigma.positions[j].y};
        const double dist = std::hypot(dv.x, dv.y);
        if (dist > 0.5 * std::numbers::sqrt2 || dist == 0.0) continue;
        push.x += dv.x / dist;
        push.y += dv.y / dist;
    }
    const Point attraction = unit(pull), repulsion = unit(push);
    const auto& h = problem.heuristics;
    const Point dir = unit({h[0] * random.x + h[1] * (1.0 + t) * attraction.x + h[2] * t * repulsion.x,
                            h[0] * random.y + h[1] * (1.0 + t) * attraction.y + h[2] * t * repulsion.y});
    const double step = std::min(1.0, t);
    out.positions[i] = {pi.x + step * dir.x, pi.y + step * dir.y};
    normalize_positions(out.positions);
    return out;
}

LayoutConfiguration perturb_weight(const LayoutConfiguration& sigma, const AnnealProblem& problem, double t,
                                   Rng& rng) {
    LayoutConfiguration out = sigma;
    const std::size_t i = pick(sigma.weights.size(), rng);
    const bool magnify = uniform01(rng) < 0.5;
    const double w = magnify ? sigma.weights[i] * (1.0 + t) : sigma.weights[i] / (1.0 + t);
    const double base = problem.original_weights[i];
    out.weights[i] = std::clamp(w, base / kWeightClip, base * kWeightClip);
    return out;
}

LayoutConfiguration perturb_ratio(const LayoutConfiguration& sigma, double t, Rng& rng) {
    LayoutConfiguration out = sigma;
    const bool magnify = uniform01(rng) < 0.5;
    out.ratio = std::clamp(magnify ? sigma.ratio * (1.0 + t) : sigma.ratio / (1.0 + t), 1.0, kRatioMax);
    return out;
}

bool accept(double cost_old, double cost_new, double t, Rng& rng) {
    if (cost_new < cost_old) return true;
    return uniform01(rng) < std::exp((cost_old - cost_new) / (t / 256.0));
}

const char* action_name(Action a) {
    switch (a) {
        case Action::Position: return "position";
        case Action::Weight: return "weight";
        case Action::Ratio: return "ratio";
    }
    return "?";
}

nlohmann::json to_json(const TraceRecord& r) {
    return {{"phase", r.phase == 0 ? "main" : "fine"},
            {"stage", r.stage},
            {"iteration", r.iteration},
            {"action", action_name(r.action)},
            {"accepted", r.accepted},
            {"temperature", r.temperature},
            {"areal_error", r.candidate.areal_error},
            {"topological_error", r.candidate.topological_error},
            {"aspect_ratio_loss", r.candidate.aspect_ratio_loss},
            {"cost", r.candidate.total_cost},
            {"current_cost", r.current_cost},
            {"best_cost", r.best_cost}};
}

LayoutConfiguration initial_configuration(const AnnealProblem& problem,
                                          const std::vector<std::optional<Point>>& seed_positions, Rng& rng) {
    const std::size_t n = problem.graph->size();
    LayoutConfiguration sigma;
    sigma.weights = problem.original_weights;
    sigma.ratio = problem.user_ratio;
    sigma.positions.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = uniform01(rng), y = uniform01(rng);
        if (i < seed_positions.size() && seed_positions[i])
            sigma.positions[i] = *seed_positions[i];
        else
            sigma.positions[i] = {x, y};
    }
    normalize_positions(sigma.positions);
    return sigma;
}

OptimizeResult optimize(const Graph& graph, const AnnealParams& params,
                        const std::vector<std::optional<Point>>& seed_positions) {
    params.validate();
    if (graph.size() == 0) throw std::invalid_argument("cannot lay out an empty graph");
    const AnnealProblem problem(graph, params);
    const double t_lower = params.t_lower > 0.0
                               ? params.t_lower
                               : lower_temperature(*std::min_element(problem.alpha.begin(), problem.alpha.end()),
                                                   params.ratio);
    const double gamma = cooling_schedule(params.stages, params.t_upper, t_lower);
    const std::size_t ni = params.iterations > 0 ? params.iterations : std::max<std::size_t>(1, graph.size());

    std::vector<Action> actions{Action::Position};
    if (params.weight_perturbation) actions.push_back(Action::Weight);
    actions.push_back(Action::Ratio);

    Rng rng(params.seed);
    OptimizeResult result;
    result.seed = params.seed;
    LayoutConfiguration current = initial_configuration(problem, seed_positions, rng);
    Evaluation current_eval = evaluate(current, problem);
    result.best = current;
    result.evaluation = current_eval;
    result.evaluations = 1;

    for (int phase = 0; phase < 2; ++phase) {
        for (std::size_t s = 0; s < params.stages; ++s) {
            const double t = stage_temperature(params.t_upper, gamma, s);
            for (std::size_t it = 0; it < ni; ++it) {
                const Action action = actions[pick(actions.size(), rng)];
                LayoutConfiguration candidate;
                switch (action) {
                    case Action::Position:
                        candidate = perturb_position(current, problem, current_eval.contacts, t, rng);
                        break;
                    case Action::Weight: candidate = perturb_weight(current, problem, t, rng); break;
                    case Action::Ratio: candidate = perturb_ratio(current, t, rng); break;
                }
                Evaluation eval = evaluate(candidate, problem);
                ++result.evaluations;
                const double old_cost = current_eval.report.total_cost;
                const double new_cost = eval.report.total_cost;
                const bool ok = phase == 0 ? accept(old_cost, new_cost, t, rng) : new_cost < old_cost;
                if (new_cost < result.evaluation.report.total_cost) {
                    result.best = candidate;
                    result.evaluation = eval;
                }
                if (params.record_trace)
                    result.trace.push_back({phase, s, it, action, ok, t, eval.report,
                                            ok ? new_cost : old_cost, result.evaluation.report.total_cost});
                if (ok) {
                    current = std::move(candidate);
                    current_eval = std::move(eval);
                }
            }
        }
    }
    return result;
}

std::vector<OptimizeResult> optimize_restarts(const Graph& graph, const AnnealParams& params,
                                              const std::vector<std::uint64_t>& seeds,
                                              const std::vector<std::optional<Point>>& seed_positions) {
    std::vector<std::future<OptimizeResult>> jobs;
    for (auto seed : seeds) {
        AnnealParams p = params;
        p.seed = seed;
        jobs.push_back(std::async(std::launch::async, [&graph, p, &seed_positions] {
            return optimize(graph, p, seed_positions);
        }));
    }
    std::vector<OptimizeResult> out;
    for (auto& job : jobs) out.push_back(job.get());
    return out;
}

std::size_t best_result(const std::vector<OptimizeResult>& results) {
    if (results.empty()) throw std::invalid_argument("no results");
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].evaluation.report.total_cost < results[best].evaluation.report.total_cost) best = i;
    return best;
}

}  // namespace vmap
