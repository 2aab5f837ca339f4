#pragma once

#include "forestmatrix/matrix.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace forestmatrix {

/// Simple undirected labeled graph. Vertex labels are 1..n everywhere on
/// the public surface (edge lists, JSON, error messages); matrix views are
/// 0-indexed with row k standing for vertex k+1. Instances are immutable
/// after construction and safe to share between threads.
class Graph {
public:
    /// Validates and canonicalizes the edge list: endpoints must lie in
    /// 1..n, self-loops and duplicates (in either orientation) are
    /// rejected with a message naming the offending edge.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int v) const;
    /// Neighbors of v in increasing order, 1-based.
    std::span<const int> neighbors(int v) const;
    bool has_edge(int u, int v) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adjacency_flat_;
    std::vector<int> adjacency_offset_;
};

Graph make_path(int n);          // n >= 2, edges (1,2),(2,3),...,(n-1,n)
Graph make_cycle(int n);         // n >= 3, path plus the closing edge (n,1)
Graph make_tcaterpillar(int n);  // n >= 3, path with edge (1,2) replaced by (1,3)
Graph make_complete(int n);      // n >= 1

/// G plus one new vertex n+1 adjacent to every vertex of G. The spanning
/// trees of the result are in bijection with the rooted forests of G.
Graph augment_with_hub(const Graph& g);

/// Erdos-Renyi style sample: every pair becomes an edge independently with
/// the given probability. Deterministic in (n, edge_probability, seed).
/// May be disconnected.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

IntegerMatrix adjacency_matrix(const Graph& g);
IntegerMatrix laplacian(const Graph& g);
IntegerMatrix identity_plus_laplacian(const Graph& g);

/// Graph JSON: {"n": <int>, "edges": [[u, v], ...]} with 1-based labels.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);
Graph load_graph(const std::filesystem::path& path);

}  // namespace forestmatrix
