#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vmap/bench.hpp"
#include "vmap/datasets.hpp"
#include "vmap/pipeline.hpp"
#include "vmap/render.hpp"
#include "vmap/service.hpp"

namespace {

constexpr int kExitIo = 2;

struct InputOptions {
    std::string input;
    std::string builtin;
};

struct RunOptions {
    std::string lambda = "0.5,0.5,0";
    std::size_t ns = 2048;
    std::size_t ni = 0;
    std::uint64_t seed = 1;
    double ratio = 1.5;
    double border = 0.0;
    std::size_t restarts = 1;
    bool no_weight_perturb = false;
    double width = 1200.0;
    double height = 800.0;
};

void add_input(CLI::App* cmd, InputOptions& in) {
    auto* file = cmd->add_option("--input", in.input, "graph document (JSON)");
    auto* name = cmd->add_option("--builtin", in.builtin, "builtin dataset name");
    file->excludes(name);
}

void add_run(CLI::App* cmd, RunOptions& run) {
    cmd->add_option("--lambda", run.lambda, "cost weights areal,topological,ratio")->capture_default_str();
    cmd->add_option("--ns", run.ns, "annealing stages")->capture_default_str();
    cmd->add_option("--ni", run.ni, "iterations per stage (default |V|)");
    cmd->add_option("--seed", run.seed, "random seed")->capture_default_str();
    cmd->add_option("--ratio", run.ratio, "desired aspect ratio")->capture_default_str();
    cmd->add_option("--border", run.border, "border half-width d (default 1% of the shorter display side)");
    cmd->add_option("--restarts", run.restarts, "independent annealing chains")->capture_default_str();
    cmd->add_flag("--no-weight-perturb", run.no_weight_perturb, "keep vertex weights fixed");
    cmd->add_option("--width", run.width, "display width")->capture_default_str();
    cmd->add_option("--height", run.height, "display height")->capture_default_str();
}

vmap::CostWeights parse_lambda(const std::string& text) {
    std::stringstream in(text);
    std::string part;
    std::vector<double> v;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        const double x = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad --lambda component '" + part + "'");
        v.push_back(x);
    }
    if (v.size() != 3) throw std::invalid_argument("--lambda needs three comma-separated weights");
    vmap::CostWeights w{v[0], v[1], v[2]};
    w.validate();
    return w;
}

vmap::GraphDocument load_input(const InputOptions& in) {
    if (!in.builtin.empty()) return vmap::builtin(in.builtin).document;
    if (in.input.empty()) throw std::invalid_argument("one of --input or --builtin is required");
    auto doc = vmap::load_graph_file(in.input);
    if (doc.name.empty()) doc.name = in.input;
    return doc;
}

vmap::PipelineConfig pipeline_config(const RunOptions& run, bool trace) {
    vmap::PipelineConfig cfg;
    cfg.anneal.weights = parse_lambda(run.lambda);
    cfg.anneal.stages = run.ns;
    cfg.anneal.iterations = run.ni;
    cfg.anneal.seed = run.seed;
    cfg.anneal.ratio = run.ratio;
    cfg.anneal.weight_perturbation = !run.no_weight_perturb;
    cfg.anneal.display = {0.0, 0.0, run.width, run.height};
    cfg.anneal.record_trace = trace;
    cfg.restarts = run.restarts;
    if (run.border > 0.0) cfg.border = run.border;
    return cfg;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
    out << text;
}

std::string metrics_line(const vmap::PipelineResult& r) {
    const auto& m = r.document.metrics;
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "error_a=%.6f error_t=%.6f lost=%zu fake=%zu loss_r=%.6f cost=%.6f amended_t=%.6f bridges=%zu "
                  "border=%.4g%s",
                  m.areal_error, m.topological_error, m.lost_edges, m.fake_edges, m.aspect_ratio_loss, m.total_cost,
                  m.amended_topological_error, r.document.bridges.size(), r.document.border,
                  r.border_reduced ? " (reduced to fit)" : "");
    return buf;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--path expects a,b");
    return {s.substr(0, comma), s.substr(comma + 1)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vmap: rectangular space-filling maps of vertex-weighted graphs"};
    app.require_subcommand(1);

    InputOptions layout_in;
    RunOptions layout_run;
    std::string out_path, svg_path, trace_path;
    bool ego_all = false;
    auto* layout = app.add_subcommand("layout", "optimize, adjust borders and export a layout");
    add_input(layout, layout_in);
    add_run(layout, layout_run);
    layout->add_option("--out", out_path, "layout document output (JSON)");
    layout->add_option("--svg", svg_path, "SVG output");
    layout->add_option("--trace", trace_path, "annealing trace output (JSON lines)");
    layout->add_flag("--ego", ego_all, "store every vertex's ego channels in the document");

    auto* bench = app.add_subcommand("bench", "benchmarks");
    bench->require_subcommand(1);
    std::size_t bench_n = 100, bench_trials = 1000;
    double bench_r = 1.5;
    std::uint64_t bench_seed = 1;
    std::string csv_path;
    auto* ratio = bench->add_subcommand("ratio", "DAR vs SEW aspect-ratio loss on lognormal points");
    ratio->add_option("--n", bench_n, "points per trial")->capture_default_str();
    ratio->add_option("--trials", bench_trials, "trials")->capture_default_str();
    ratio->add_option("--r", bench_r, "desired aspect ratio")->capture_default_str();
    ratio->add_option("--seed", bench_seed, "master seed")->capture_default_str();
    ratio->add_option("--csv", csv_path, "CSV output (default stdout)");
    InputOptions opt_in;
    RunOptions opt_run;
    std::size_t repeats = 5;
    auto* opt = bench->add_subcommand("opt", "repeated annealing on one dataset");
    add_input(opt, opt_in);
    add_run(opt, opt_run);
    opt->add_option("--repeats", repeats, "independent runs")->capture_default_str();
    opt->add_option("--csv", csv_path, "CSV output (default stdout)");

    InputOptions serve_in;
    RunOptions serve_run;
    std::string serve_layout, host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "serve a layout over HTTP");
    add_input(serve, serve_in);
    add_run(serve, serve_run);
    serve->add_option("--layout", serve_layout, "previously exported layout document");
    serve->add_option("--host", host, "bind address")->capture_default_str();
    serve->add_option("--port", port, "port")->capture_default_str();

    std::string render_layout, render_svg_path, render_ego, render_path;
    bool debug_cuts = false, no_labels = false;
    auto* render = app.add_subcommand("render", "render an exported layout to SVG");
    render->add_option("--layout", render_layout, "layout document")->required();
    render->add_option("--svg", render_svg_path, "SVG output")->required();
    render->add_option("--ego", render_ego, "overlay the ego channels of this vertex");
    render->add_option("--path", render_path, "overlay the route between two vertices, a,b");
    render->add_flag("--debug-cuts", debug_cuts, "draw cut lines, thicker for earlier cuts");
    render->add_flag("--no-labels", no_labels, "omit labels");

    CLI11_PARSE(app, argc, argv);

    try {
        if (layout->parsed()) {
            const auto input = load_input(layout_in);
            auto cfg = pipeline_config(layout_run, !trace_path.empty());
            cfg.precompute_ego = ego_all;
            const auto result = vmap::run_pipeline(input, cfg);
            const auto text = vmap::dump_layout(result.document);
            if (!out_path.empty()) write_file(out_path, text);
            if (!svg_path.empty()) write_file(svg_path, vmap::render_svg(result.document));
            if (!trace_path.empty()) {
                std::string lines;
                for (const auto& rec : result.optimum.trace) lines += vmap::to_json(rec).dump() + "\n";
                write_file(trace_path, lines);
            }
            std::cout << metrics_line(result) << "\n";
        } else if (ratio->parsed()) {
            const auto r = vmap::bench_aspect_ratio(bench_trials, bench_n, bench_r, bench_seed);
            std::ostringstream csv;
            vmap::write_csv(csv, r.rows());
            if (csv_path.empty()) std::cout << csv.str();
            else write_file(csv_path, csv.str());
        } else if (opt->parsed()) {
            const auto input = load_input(opt_in);
            const auto cfg = pipeline_config(opt_run, false);
            const auto name = opt_in.builtin.empty() ? input.name : opt_in.builtin;
            const auto r = vmap::bench_optimize(name, input.graph, cfg.anneal, repeats);
            std::ostringstream csv;
            vmap::write_csv(csv, r.rows());
            if (csv_path.empty()) std::cout << csv.str();
            else write_file(csv_path, csv.str());
        } else if (serve->parsed()) {
            vmap::LayoutDocument doc;
            if (!serve_layout.empty()) {
                doc = vmap::load_layout_file(serve_layout);
            } else {
                doc = vmap::run_pipeline(load_input(serve_in), pipeline_config(serve_run, false)).document;
            }
            vmap::QueryService service(std::move(doc));
            std::cerr << "serving on http://" << host << ":" << port << "\n";
            vmap::serve(service, host, port);
        } else if (render->parsed()) {
            const auto doc = vmap::load_layout_file(render_layout);
            vmap::RenderOptions options;
            options.debug_cuts = debug_cuts;
            options.labels = !no_labels;
            const auto graph = vmap::document_graph(doc);
            if (!render_ego.empty()) {
                const auto v = graph.index_of(render_ego);
                auto channels = vmap::ego_network(doc.network, graph, v);
                options.channels.insert(options.channels.end(), channels.begin(), channels.end());
            }
            if (!render_path.empty()) {
                const auto [a, b] = split_pair(render_path);
                auto route = vmap::route_query(doc.network, graph, graph.index_of(a), graph.index_of(b));
                options.channels.insert(options.channels.end(), route.channels.begin(), route.channels.end());
                options.highlighted = route.highlighted;
            }
            write_file(render_svg_path, vmap::render_svg(doc, options));
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "vmap: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "vmap: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
