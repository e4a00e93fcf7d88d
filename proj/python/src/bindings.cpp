#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "vmap/anneal.hpp"
#include "vmap/bench.hpp"
#include "vmap/datasets.hpp"
#include "vmap/layout_document.hpp"
#include "vmap/metrics.hpp"
#include "vmap/partition.hpp"
#include "vmap/pipeline.hpp"
#include "vmap/render.hpp"
#include "vmap/service.hpp"

namespace py = pybind11;
using namespace vmap;

namespace {

using RectTuple = std::tuple<double, double, double, double>;

Rect to_rect(const RectTuple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)}; }
RectTuple from_rect(const Rect& r) { return {r.x, r.y, r.w, r.h}; }

std::vector<PartitionItem> make_items(const std::vector<double>& weights,
                                      const std::vector<std::pair<double, double>>& positions) {
    if (weights.size() != positions.size()) throw std::invalid_argument("weights and positions differ in length");
    std::vector<PartitionItem> items(weights.size());
    for (std::size_t i = 0; i < items.size(); ++i)
        items[i] = {i, weights[i], {positions[i].first, positions[i].second}, i};
    return items;
}

std::vector<RectTuple> leaf_tuples(const PartitionTree& tree) {
    std::vector<RectTuple> out;
    for (const auto& r : tree.leaf_rects()) out.push_back(from_rect(r));
    return out;
}

GraphDocument input_graph(const std::optional<std::string>& graph_json, const std::optional<std::string>& name) {
    if (graph_json.has_value() == name.has_value()) throw std::invalid_argument("give exactly one of graph_json or builtin");
    return name ? builtin(*name).document : load_graph_text(*graph_json);
}

std::string layout(const std::optional<std::string>& graph_json, const std::optional<std::string>& name,
                   std::size_t ns, std::size_t ni, std::uint64_t seed, std::array<double, 3> lambda, double ratio,
                   std::optional<double> border, std::size_t restarts, double width, double height,
                   bool weight_perturbation, bool ego) {
    PipelineConfig cfg;
    cfg.anneal.stages = ns;
    cfg.anneal.iterations = ni;
    cfg.anneal.seed = seed;
    cfg.anneal.weights = {lambda[0], lambda[1], lambda[2]};
    cfg.anneal.ratio = ratio;
    cfg.anneal.display = {0.0, 0.0, width, height};
    cfg.anneal.weight_perturbation = weight_perturbation;
    cfg.border = border;
    cfg.restarts = restarts;
    cfg.precompute_ego = ego;
    const auto input = input_graph(graph_json, name);
    py::gil_scoped_release release;
    return dump_layout(run_pipeline(input, cfg).document);
}

std::string measure_json(const std::string& graph_json, const std::vector<RectTuple>& rects, double ratio,
                         std::array<double, 3> lambda, double eps) {
    const auto doc = load_graph_text(graph_json);
    std::vector<Rect> rs;
    for (const auto& t : rects) rs.push_back(to_rect(t));
    if (rs.size() != doc.graph.size()) throw std::invalid_argument("one rectangle per vertex expected");
    const CostWeights w{lambda[0], lambda[1], lambda[2]};
    w.validate();
    return to_json(measure(doc.graph, normalize_weights(doc.graph), rs, ratio, w, eps)).dump();
}

class Session {
public:
    explicit Session(const std::string& doc_json)
        : service_(layout_from_json(nlohmann::json::parse(doc_json))) {}

    std::pair<int, std::string> get(const std::string& target) {
        const auto r = service_.get(target);
        return {r.status, r.body};
    }

    std::string svg(const std::optional<std::string>& ego, const std::optional<std::pair<std::string, std::string>>& path,
                    bool labels, bool debug_cuts) {
        const auto& doc = service_.document();
        const auto& graph = service_.graph();
        RenderOptions options;
        options.labels = labels;
        options.debug_cuts = debug_cuts;
        if (ego) options.channels = ego_network(doc.network, graph, graph.index_of(*ego));
        if (path) {
            const auto route = route_query(doc.network, graph, graph.index_of(path->first),
                                           graph.index_of(path->second), RouteMode::HopPath);
            options.channels.insert(options.channels.end(), route.channels.begin(), route.channels.end());
            options.highlighted = route.highlighted;
        }
        return render_svg(doc, options);
    }

private:
    QueryService service_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of the vmap layout engine";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<BorderTooWide>(m, "BorderTooWide", PyExc_ValueError);
    py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_LookupError);

    m.attr("LAYOUT_FORMAT") = kLayoutFormat;
    m.def("builtin_names", &builtin_names);
    m.def("builtin_graph", [](const std::string& name) { return graph_to_json(builtin(name).document.graph).dump(); });

    m.def("dar_partition", [](const RectTuple& rect, const std::vector<double>& weights,
                              const std::vector<std::pair<double, double>>& positions, double r) {
        return leaf_tuples(dar_partition(to_rect(rect), make_items(weights, positions), r));
    }, py::arg("rect"), py::arg("weights"), py::arg("positions"), py::arg("ratio") = 1.5);
    m.def("sew_partition", [](const RectTuple& rect, const std::vector<double>& weights,
                              const std::vector<std::pair<double, double>>& positions, double r) {
        return leaf_tuples(sew_partition(to_rect(rect), make_items(weights, positions), r));
    }, py::arg("rect"), py::arg("weights"), py::arg("positions"), py::arg("ratio") = 1.5);
    m.def("aspect_ratio_loss", [](const std::vector<RectTuple>& rects, double r) {
        std::vector<Rect> rs;
        for (const auto& t : rects) rs.push_back(to_rect(t));
        return aspect_ratio_loss(rs, r);
    });

    m.def("measure", &measure_json, py::arg("graph_json"), py::arg("rects"), py::arg("ratio") = 1.5,
          py::arg("weights") = std::array<double, 3>{0.5, 0.5, 0.0}, py::arg("eps") = 1e-9);

    m.def("cooling_schedule", &cooling_schedule, py::arg("ns"), py::arg("t_upper"), py::arg("t_lower"));
    m.def("lower_temperature", &lower_temperature, py::arg("min_alpha"), py::arg("ratio"));

    m.def("layout", &layout, py::kw_only(), py::arg("graph_json") = py::none(), py::arg("builtin") = py::none(),
          py::arg("ns") = 2048, py::arg("ni") = 0, py::arg("seed") = 1,
          py::arg("weights") = std::array<double, 3>{0.5, 0.5, 0.0}, py::arg("ratio") = 1.5,
          py::arg("border") = py::none(), py::arg("restarts") = 1, py::arg("width") = 1200.0,
          py::arg("height") = 800.0, py::arg("weight_perturbation") = true, py::arg("ego") = false);

    m.def("bench_aspect_ratio", [](std::size_t trials, std::size_t n, double r, std::uint64_t seed) {
        py::gil_scoped_release release;
        const auto b = bench_aspect_ratio(trials, n, r, seed);
        return std::pair{b.dar_summary().mean, b.sew_summary().mean};
    }, py::arg("trials"), py::arg("n"), py::arg("ratio") = 1.5, py::arg("seed") = 1);

    py::class_<Session>(m, "Session")
        .def(py::init<const std::string&>(), py::arg("document_json"))
        .def("get", &Session::get, py::arg("target"))
        .def("svg", &Session::svg, py::kw_only(), py::arg("ego") = py::none(), py::arg("path") = py::none(),
             py::arg("labels") = true, py::arg("debug_cuts") = false);
}
