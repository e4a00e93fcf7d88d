#include "vmap/service.hpp"

#include <httplib.h>

#include <stdexcept>

namespace vmap {

using nlohmann::json;

namespace {

HttpResponse error(int status, const std::string& code, const std::string& message) {
    return {status, json{{"error", code}, {"message", message}}.dump()};
}

std::string decode(std::string_view s) { return httplib::detail::decode_url(std::string(s), false); }

}  // namespace

QueryService::QueryService(LayoutDocument doc)
    : doc_(std::move(doc)), graph_(document_graph(doc_)), layout_body_(dump_layout(doc_)), cache_(doc_.ego) {}

HttpResponse QueryService::layout() const { return {200, layout_body_}; }

HttpResponse QueryService::health() const {
    return {200, json{{"status", "ok"},
                      {"vertices", doc_.vertices.size()},
                      {"edges", doc_.edges.size()},
                      {"format", kLayoutFormat}}
                     .dump()};
}

const std::vector<RoutedChannel>& QueryService::ego_channels(std::size_t v) {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(v); it != cache_.end()) return it->second;
    }
    auto channels = ego_network(doc_.network, graph_, v);
    std::lock_guard lock(mutex_);
    return cache_.emplace(v, std::move(channels)).first->second;
}

HttpResponse QueryService::ego(std::string_view id) {
    const auto v = graph_.find(id);
    if (!v) return error(404, "not found", "unknown vertex '" + std::string(id) + "'");
    json list = json::array();
    for (const auto& ch : ego_channels(*v)) list.push_back(channel_to_json(ch, doc_));
    return {200, json{{"id", std::string(id)}, {"channels", list}}.dump()};
}

HttpResponse QueryService::path(std::string_view a, std::string_view b, bool geometric) {
    const auto ia = graph_.find(a), ib = graph_.find(b);
    if (!ia) return error(404, "not found", "unknown vertex '" + std::string(a) + "'");
    if (!ib) return error(404, "not found", "unknown vertex '" + std::string(b) + "'");
    if (*ia == *ib) return error(400, "bad request", "path endpoints must differ");
    RouteResult route;
    try {
        route = route_query(doc_.network, graph_, *ia, *ib, geometric ? RouteMode::Geometric : RouteMode::HopPath);
    } catch (const DisconnectedError& e) {
        return error(409, "disconnected", e.what());
    }
    json hops = json::array(), highlighted = json::array(), channels = json::array();
    for (auto v : route.hops) hops.push_back(doc_.vertices[v].id);
    for (auto v : route.highlighted) highlighted.push_back(doc_.vertices[v].id);
    for (const auto& ch : route.channels) channels.push_back(channel_to_json(ch, doc_));
    return {200, json{{"source", std::string(a)},
                      {"target", std::string(b)},
                      {"mode", geometric ? "geometric" : "hop"},
                      {"hops", hops},
                      {"channels", channels},
                      {"highlighted", highlighted}}
                     .dump()};
}

HttpResponse QueryService::get(std::string_view target) {
    std::string_view query;
    if (auto q = target.find('?'); q != std::string_view::npos) {
        query = target.substr(q + 1);
        target = target.substr(0, q);
    }
    std::vector<std::string> parts;
    for (std::size_t pos = 0; pos < target.size();) {
        if (target[pos] == '/') {
            ++pos;
            continue;
        }
        const auto end = std::min(target.find('/', pos), target.size());
        parts.push_back(decode(target.substr(pos, end - pos)));
        pos = end;
    }
    if (parts.size() == 1 && parts[0] == "layout") return layout();
    if (parts.size() == 1 && parts[0] == "health") return health();
    if (parts.size() == 2 && parts[0] == "ego") return ego(parts[1]);
    if (parts.size() == 3 && parts[0] == "path") return path(parts[1], parts[2], query.find("mode=geometric") != std::string_view::npos);
    return error(404, "not found", "no route for '" + std::string(target) + "'");
}

void mount(httplib::Server& server, QueryService& service) {
    auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
        const auto out = service.get(req.target);
        res.status = out.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(out.body, out.content_type);
    };
    server.Get("/layout", handler);
    server.Get("/health", handler);
    server.Get(R"(/ego/([^/]+))", handler);
    server.Get(R"(/path/([^/]+)/([^/]+))", handler);
}

void serve(QueryService& service, const std::string& host, int port) {
    httplib::Server server;
    mount(server, service);
    if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace vmap
