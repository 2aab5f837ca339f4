#include "forestmatrix/graph.hpp"

#include "forestmatrix/errors.hpp"
#include "forestmatrix/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace forestmatrix {

namespace {

std::string edge_name(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw ValidationError("graph needs at least one vertex, got n=" + std::to_string(n));

    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw ValidationError("edge " + edge_name(u, v) + " is a self-loop");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ValidationError("edge " + edge_name(u, v) + " has an endpoint outside 1.." +
                                  std::to_string(n));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate edge " + edge_name(u, v));
        edges_.emplace_back(key.first, key.second);
    }
    std::sort(edges_.begin(), edges_.end());

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges_) {
        adj[u - 1].push_back(v);
        adj[v - 1].push_back(u);
    }
    adjacency_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        adjacency_offset_[v + 1] = adjacency_offset_[v] + static_cast<int>(adj[v].size());
        adjacency_flat_.insert(adjacency_flat_.end(), adj[v].begin(), adj[v].end());
    }
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw ValidationError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adjacency_offset_[v] - adjacency_offset_[v - 1];
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adjacency_flat_.data() + adjacency_offset_[v - 1],
            static_cast<std::size_t>(adjacency_offset_[v] - adjacency_offset_[v - 1])};
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_path(int n) {
    if (n < 2) throw ValidationError("path needs n >= 2, got n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw ValidationError("cycle needs n >= 3, got n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return Graph(n, std::move(edges));
}

Graph make_tcaterpillar(int n) {
    if (n < 3) throw ValidationError("T-caterpillar needs n >= 3, got n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(1, 3);
    for (int i = 2; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw ValidationError("complete graph needs n >= 1, got n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph augment_with_hub(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 1; v <= n; ++v) edges.emplace_back(v, n + 1);
    return Graph(n + 1, std::move(edges));
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw ValidationError("graph needs at least one vertex, got n=" + std::to_string(n));
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw ValidationError("edge probability must lie in [0,1]");
    SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(n), 0));
    const double threshold = edge_probability * 9007199254740992.0;  // 2^53
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const double draw = static_cast<double>(rng.next() >> 11);
            if (draw < threshold) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

IntegerMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    IntegerMatrix a(n);
    for (auto [u, v] : g.edges()) {
        a(u - 1, v - 1) = 1;
        a(v - 1, u - 1) = 1;
    }
    return a;
}

IntegerMatrix laplacian(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    IntegerMatrix l(n);
    for (auto [u, v] : g.edges()) {
        l(u - 1, v - 1) = -1;
        l(v - 1, u - 1) = -1;
        l(u - 1, u - 1) += 1;
        l(v - 1, v - 1) += 1;
    }
    return l;
}

IntegerMatrix identity_plus_laplacian(const Graph& g) {
    IntegerMatrix m = laplacian(g);
    for (std::size_t i = 0; i < m.order(); ++i) m(i, i) += 1;
    return m;
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("graph JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ValidationError("graph JSON must be an object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer())
        throw ValidationError("graph JSON field \"n\" must be an integer");
    if (!doc["edges"].is_array())
        throw ValidationError("graph JSON field \"edges\" must be an array of [u,v] pairs");

    const int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
        const auto& e = doc["edges"][k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ValidationError("graph JSON edge #" + std::to_string(k + 1) +
                                  " must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return graph_from_json(buffer.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

}  // namespace forestmatrix
