#include "vmap/layout_document.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vmap {

using nlohmann::json;

namespace {

const std::array<const char*, 12> kPalette{"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                           "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

json rect_json(const Rect& r) { return json::array({r.x, r.y, r.w, r.h}); }
json point_json(const Point& p) { return json::array({p.x, p.y}); }

Rect rect_of(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("rect must be [x, y, w, h]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Point point_of(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

const char* kind_name(CorridorKind k) {
    switch (k) {
        case CorridorKind::RectSide: return "rect-side";
        case CorridorKind::BorderSide: return "border-side";
        case CorridorKind::Junction: return "junction";
    }
    return "?";
}

CorridorKind kind_of(const std::string& s) {
    if (s == "rect-side") return CorridorKind::RectSide;
    if (s == "border-side") return CorridorKind::BorderSide;
    if (s == "junction") return CorridorKind::Junction;
    throw std::invalid_argument("unknown corridor node kind '" + s + "'");
}

std::vector<CutLine> cut_lines(const PartitionTree& adjusted) {
    const double d = 0.5 * adjusted.gap;
    const auto depth = adjusted.depths();
    std::vector<CutLine> out;
    for (std::size_t i = 0; i < adjusted.nodes.size(); ++i) {
        const auto& n = adjusted.nodes[i];
        if (n.leaf()) continue;
        Segment s = n.cut == Cut::Horizontal
                        ? Segment{{n.split, n.rect.y - d}, {n.split, n.rect.bottom() + d}}
                        : Segment{{n.rect.x - d, n.split}, {n.rect.right() + d, n.split}};
        out.push_back({s, depth[i]});
    }
    return out;
}

}  // namespace

std::string cluster_color(std::size_t cluster) {
    const std::string base = kPalette[cluster % kPalette.size()];
    const std::size_t round = cluster / kPalette.size();
    if (round == 0) return base;
    const double f = std::max(0.3, 1.0 - 0.2 * static_cast<double>(round));
    char out[8];
    unsigned rgb[3];
    for (int c = 0; c < 3; ++c) {
        rgb[c] = static_cast<unsigned>(std::stoul(base.substr(1 + 2 * c, 2), nullptr, 16) * f);
    }
    std::snprintf(out, sizeof out, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
    return out;
}

LayoutDocument export_layout(const std::string& name, const Graph& graph, const std::vector<double>& alpha,
                             const std::vector<double>& alpha_p, const PartitionTree& adjusted, double ratio,
                             const std::vector<Bridge>& bridges, const CorridorNetwork& network,
                             const MetricsReport& metrics) {
    LayoutDocument doc;
    doc.name = name;
    const double d = 0.5 * adjusted.gap;
    doc.display = adjusted.root().rect.inset(-d);
    doc.border = d;
    doc.ratio = ratio;
    doc.clusters = graph.cluster_names();
    for (std::size_t c = 0; c < doc.clusters.size(); ++c) doc.palette.push_back(cluster_color(c));
    const auto rects = adjusted.leaf_rects();
    for (std::size_t i = 0; i < graph.size(); ++i) {
        const auto& v = graph.vertex(i);
        doc.vertices.push_back({v.id, v.label, v.cluster, rects.at(i), alpha.at(i), alpha_p.at(i)});
    }
    doc.edges = graph.edges();
    doc.bridges = bridges;
    doc.cuts = cut_lines(adjusted);
    doc.network = network;
    doc.metrics = metrics;
    return doc;
}

Graph document_graph(const LayoutDocument& doc) {
    std::vector<Vertex> vertices;
    for (const auto& v : doc.vertices) vertices.push_back({v.id, v.label, v.alpha, v.cluster});
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : doc.edges) edges.emplace_back(doc.vertices.at(a).id, doc.vertices.at(b).id);
    return Graph(std::move(vertices), doc.clusters, edges);
}

json channel_to_json(const RoutedChannel& ch, const LayoutDocument& doc) {
    json points = json::array();
    for (const auto& p : ch.polyline) points.push_back(point_json(p));
    return {{"source", doc.vertices.at(ch.source).id},
            {"target", doc.vertices.at(ch.target).id},
            {"points", points},
            {"length", ch.length}};
}

json to_json(const LayoutDocument& doc) {
    json clusters = json::array();
    for (std::size_t c = 0; c < doc.clusters.size(); ++c)
        clusters.push_back({{"name", doc.clusters[c]}, {"color", doc.palette.at(c)}});
    json vertices = json::array();
    for (const auto& v : doc.vertices)
        vertices.push_back({{"id", v.id},
                            {"label", v.label},
                            {"cluster", doc.clusters.at(v.cluster)},
                            {"rect", rect_json(v.rect)},
                            {"alpha", v.alpha},
                            {"alpha_p", v.alpha_p}});
    json edges = json::array();
    for (const auto& [a, b] : doc.edges) edges.push_back({doc.vertices.at(a).id, doc.vertices.at(b).id});
    json bridges = json::array();
    for (const auto& b : doc.bridges)
        bridges.push_back({{"a", doc.vertices.at(b.a).id},
                           {"b", doc.vertices.at(b.b).id},
                           {"band", rect_json(b.band)},
                           {"half_a", rect_json(b.half_a)},
                           {"half_b", rect_json(b.half_b)}});
    json cuts = json::array();
    for (const auto& c : doc.cuts)
        cuts.push_back({{"from", point_json(c.segment.a)}, {"to", point_json(c.segment.b)}, {"depth", c.depth}});

    json nodes = json::array();
    for (const auto& n : doc.network.nodes) {
        json jn = {{"x", n.p.x}, {"y", n.p.y}, {"kind", kind_name(n.kind)}};
        if (n.owner != kNoItem) jn["owner"] = doc.vertices.at(n.owner).id;
        nodes.push_back(jn);
    }
    json links = json::array();
    for (const auto& e : doc.network.edges) links.push_back({e.a, e.b, e.length});
    json ports = json::object();
    for (std::size_t v = 0; v < doc.network.ports.size(); ++v) ports[doc.vertices.at(v).id] = doc.network.ports[v];

    json out = {{"format", kLayoutFormat},
                {"name", doc.name},
                {"display", rect_json(doc.display)},
                {"border", doc.border},
                {"ratio", doc.ratio},
                {"clusters", clusters},
                {"vertices", vertices},
                {"edges", edges},
                {"bridges", bridges},
                {"cuts", cuts},
                {"network", {{"nodes", nodes}, {"edges", links}, {"ports", ports}}},
                {"metrics", to_json(doc.metrics)},
                {"config", doc.config}};
    if (!doc.ego.empty()) {
        json ego = json::object();
        for (const auto& [v, channels] : doc.ego) {
            json list = json::array();
            for (const auto& ch : channels) list.push_back(channel_to_json(ch, doc));
            ego[doc.vertices.at(v).id] = list;
        }
        out["ego"] = ego;
    }
    return out;
}

LayoutDocument layout_from_json(const json& j) {
    if (auto problems = validate_layout_document(j); !problems.empty())
        throw std::invalid_argument("invalid layout document: " + problems.front());
    LayoutDocument doc;
    doc.name = j.at("name").get<std::string>();
    doc.display = rect_of(j.at("display"));
    doc.border = j.at("border").get<double>();
    doc.ratio = j.at("ratio").get<double>();
    std::map<std::string, std::size_t> cluster_index;
    for (const auto& c : j.at("clusters")) {
        cluster_index[c.at("name").get<std::string>()] = doc.clusters.size();
        doc.clusters.push_back(c.at("name").get<std::string>());
        doc.palette.push_back(c.at("color").get<std::string>());
    }
    std::map<std::string, std::size_t> index;
    for (const auto& v : j.at("vertices")) {
        index[v.at("id").get<std::string>()] = doc.vertices.size();
        doc.vertices.push_back({v.at("id").get<std::string>(), v.at("label").get<std::string>(),
                                cluster_index.at(v.at("cluster").get<std::string>()), rect_of(v.at("rect")),
                                v.at("alpha").get<double>(), v.at("alpha_p").get<double>()});
    }
    auto id = [&](const json& s) { return index.at(s.get<std::string>()); };
    for (const auto& e : j.at("edges")) doc.edges.push_back(make_edge(id(e[0]), id(e[1])));
    for (const auto& b : j.at("bridges"))
        doc.bridges.push_back({id(b.at("a")), id(b.at("b")), rect_of(b.at("band")), rect_of(b.at("half_a")),
                               rect_of(b.at("half_b"))});
    for (const auto& c : j.at("cuts"))
        doc.cuts.push_back({{point_of(c.at("from")), point_of(c.at("to"))}, c.at("depth").get<std::size_t>()});

    const auto& net = j.at("network");
    for (const auto& n : net.at("nodes")) {
        CorridorNode node{{n.at("x").get<double>(), n.at("y").get<double>()},
                          kind_of(n.at("kind").get<std::string>()),
                          kNoItem};
        if (n.contains("owner")) node.owner = id(n.at("owner"));
        doc.network.nodes.push_back(node);
    }
    for (const auto& e : net.at("edges"))
        doc.network.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()});
    doc.network.ports.resize(doc.vertices.size());
    for (const auto& [vid, p] : net.at("ports").items())
        doc.network.ports.at(index.at(vid)) = p.get<std::array<std::size_t, 4>>();

    doc.metrics = metrics_from_json(j.at("metrics"));
    doc.config = j.value("config", json::object());
    if (j.contains("ego")) {
        for (const auto& [vid, list] : j.at("ego").items()) {
            auto& channels = doc.ego[index.at(vid)];
            for (const auto& c : list) {
                RoutedChannel ch{id(c.at("source")), id(c.at("target")), {}, c.at("length").get<double>()};
                for (const auto& p : c.at("points")) ch.polyline.push_back(point_of(p));
                channels.push_back(std::move(ch));
            }
        }
    }
    return doc;
}

std::string dump_layout(const LayoutDocument& doc) { return to_json(doc).dump(1) + "\n"; }

LayoutDocument load_layout_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return layout_from_json(json::parse(buf.str()));
}

std::vector<std::string> validate_layout_document(const json& j) {
    std::vector<std::string> problems;
    auto need = [&](const json& obj, const char* key, auto pred, const char* what, const std::string& where) {
        if (!obj.is_object() || !obj.contains(key) || !pred(obj[key])) {
            problems.push_back(where + "." + key + " must be " + what);
            return false;
        }
        return true;
    };
    auto is_rect = [](const json& v) {
        if (!v.is_array() || v.size() != 4) return false;
        for (const auto& x : v)
            if (!x.is_number()) return false;
        return v[2].get<double>() >= 0.0 && v[3].get<double>() >= 0.0;
    };
    auto is_number = [](const json& v) { return v.is_number(); };
    auto is_string = [](const json& v) { return v.is_string(); };
    auto is_array = [](const json& v) { return v.is_array(); };
    auto is_object = [](const json& v) { return v.is_object(); };

    if (!j.is_object()) return {"document must be an object"};
    if (need(j, "format", is_string, "a string", "$") && j["format"] != kLayoutFormat)
        problems.push_back(std::string("$.format must be ") + kLayoutFormat);
    need(j, "name", is_string, "a string", "$");
    need(j, "display", is_rect, "[x, y, w, h]", "$");
    need(j, "border", is_number, "a number", "$");
    need(j, "ratio", is_number, "a number", "$");
    need(j, "metrics", is_object, "an object", "$");

    std::set<std::string> clusters;
    if (need(j, "clusters", is_array, "an array", "$"))
        for (const auto& c : j["clusters"])
            if (need(c, "name", is_string, "a string", "$.clusters[]") &&
                need(c, "color", is_string, "a string", "$.clusters[]"))
                clusters.insert(c["name"].get<std::string>());

    std::set<std::string> ids;
    if (need(j, "vertices", is_array, "an array", "$")) {
        for (const auto& v : j["vertices"]) {
            if (!need(v, "id", is_string, "a string", "$.vertices[]")) continue;
            const auto id = v["id"].get<std::string>();
            const auto where = "$.vertices['" + id + "']";
            if (!ids.insert(id).second) problems.push_back("duplicate vertex id '" + id + "'");
            need(v, "label", is_string, "a string", where);
            need(v, "rect", is_rect, "[x, y, w, h]", where);
            need(v, "alpha", is_number, "a number", where);
            need(v, "alpha_p", is_number, "a number", where);
            if (need(v, "cluster", is_string, "a string", where) && !clusters.count(v["cluster"].get<std::string>()))
                problems.push_back(where + " names an unknown cluster");
        }
    }
    auto known = [&](const json& s) { return s.is_string() && ids.count(s.get<std::string>()) > 0; };
    if (need(j, "edges", is_array, "an array", "$"))
        for (const auto& e : j["edges"])
            if (!e.is_array() || e.size() != 2 || !known(e[0]) || !known(e[1]))
                problems.push_back("edge " + e.dump() + " does not reference two vertices");
    if (need(j, "bridges", is_array, "an array", "$"))
        for (const auto& b : j["bridges"])
            if (!b.is_object() || !known(b.value("a", json())) || !known(b.value("b", json())) ||
                !is_rect(b.value("band", json())) || !is_rect(b.value("half_a", json())) ||
                !is_rect(b.value("half_b", json())))
                problems.push_back("malformed bridge " + b.dump());
    need(j, "cuts", is_array, "an array", "$");
    if (need(j, "network", is_object, "an object", "$")) {
        const auto& net = j["network"];
        std::size_t count = 0;
        if (need(net, "nodes", is_array, "an array", "$.network")) count = net["nodes"].size();
        if (need(net, "edges", is_array, "an array", "$.network"))
            for (const auto& e : net["edges"])
                if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
                    e[0].get<std::size_t>() >= count || e[1].get<std::size_t>() >= count)
                    problems.push_back("network edge " + e.dump() + " is malformed");
        if (need(net, "ports", is_object, "an object", "$.network"))
            for (const auto& [id, p] : net["ports"].items())
                if (!ids.count(id) || !p.is_array() || p.size() != 4)
                    problems.push_back("ports of '" + id + "' are malformed");
    }
    if (j.contains("ego")) {
        if (!j["ego"].is_object())
            problems.push_back("$.ego must be an object");
        else
            for (const auto& [id, list] : j["ego"].items())
                if (!ids.count(id) || !list.is_array()) problems.push_back("ego entry '" + id + "' is malformed");
    }
    return problems;
}

}  // namespace vmap
