#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "vmap/graph.hpp"
#include "vmap/layout_document.hpp"
#include "vmap/router.hpp"

namespace httplib {
class Server;
}

namespace vmap {

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// Read-only queries over one loaded layout document. Everything is derived
/// from the document; ego channels are cached per vertex.
class QueryService {
public:
    explicit QueryService(LayoutDocument doc);

    const LayoutDocument& document() const { return doc_; }
    const Graph& graph() const { return graph_; }

    HttpResponse layout() const;
    HttpResponse ego(std::string_view id);
    HttpResponse path(std::string_view a, std::string_view b, bool geometric = false);
    HttpResponse health() const;

    /// Dispatches a GET target such as "/ego/Javert" or "/path/a/b?mode=geometric".
    HttpResponse get(std::string_view target);

private:
    const std::vector<RoutedChannel>& ego_channels(std::size_t v);

    LayoutDocument doc_;
    Graph graph_;
    std::string layout_body_;
    std::mutex mutex_;
    std::map<std::size_t, std::vector<RoutedChannel>> cache_;
};

/// Registers the GET routes on `server`.
void mount(httplib::Server& server, QueryService& service);

/// Blocks serving on host:port.
void serve(QueryService& service, const std::string& host, int port);

}  // namespace vmap
