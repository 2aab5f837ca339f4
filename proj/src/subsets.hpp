#pragma once

// Internal helpers shared by the enumeration oracle and the forest sampler:
// edge subsets are bitmasks over g.edges() (bit k selects edge k).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <forestmatrix/disjoint_set.hpp>
#include <forestmatrix/enumeration.hpp>
#include <forestmatrix/errors.hpp>
#include <forestmatrix/graph.hpp>

namespace forestmatrix::detail {

inline void check_edge_cap(const Graph& g) {
    if (g.edge_count() > kEnumerationEdgeCap) {
        throw ResourceLimitError("enumeration over " +
                                 std::to_string(g.edge_count()) +
                                 " edges exceeds the cap of " +
                                 std::to_string(kEnumerationEdgeCap) +
                                 " edges");
    }
}

// Union-find over the edges selected by `mask`; true when the subset is a
// forest (no cycle closed).
inline bool build_subset(const Graph& g, std::uint32_t mask, DisjointSet& dsu) {
    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (mask >> k & 1u) {
            if (!dsu.unite(edges[k].first - 1, edges[k].second - 1)) {
                return false;
            }
        }
    }
    return true;
}

// Components of the selected subgraph as sorted 1-based vertex lists,
// ordered by their smallest vertex.
inline std::vector<std::vector<int>> components_of(const Graph& g,
                                                   DisjointSet& dsu) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::map<int, std::size_t> index_of_rep;
    for (int v = 0; v < n; ++v) {
        const int rep = dsu.find(v);
        auto [it, fresh] = index_of_rep.try_emplace(rep, comps.size());
        if (fresh) comps.emplace_back();
        comps[it->second].push_back(v + 1);
    }
    return comps;
}

}  // namespace forestmatrix::detail
