#include <forestmatrix/dissemination.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include <forestmatrix/disjoint_set.hpp>
#include <forestmatrix/errors.hpp>

#include "subsets.hpp"

namespace forestmatrix {

ForestSampler::ForestSampler(Graph g) : g_(std::move(g)) {
    detail::check_edge_cap(g_);
    const std::uint32_t subsets = 1u << g_.edge_count();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        DisjointSet dsu(g_.vertex_count());
        if (!detail::build_subset(g_, mask, dsu)) continue;

        std::uint64_t weight = 1;  // rootings of this subset
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (dsu.find(v) == v) {
                weight *= static_cast<std::uint64_t>(dsu.component_size(v));
            }
        }
        total_ += weight;  // < 2^40 under the edge cap
        acyclic_masks_.push_back(mask);
        cumulative_.push_back(total_);
    }
}

RootedForest ForestSampler::sample(SplitMix64& rng) const {
    // Subset index whose cumulative weight bracket contains the ticket.
    const std::uint64_t ticket = rng.uniform_below(total_);
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), ticket);
    const std::uint32_t mask =
        acyclic_masks_[static_cast<std::size_t>(it - cumulative_.begin())];

    DisjointSet dsu(g_.vertex_count());
    detail::build_subset(g_, mask, dsu);
    const auto comps = detail::components_of(g_, dsu);

    RootedForest forest;
    const auto& edges = g_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (mask >> k & 1u) forest.edges.push_back(edges[k]);
    }
    forest.roots.reserve(comps.size());
    for (const auto& comp : comps) {
        forest.roots.push_back(comp[rng.uniform_below(comp.size())]);
    }
    return forest;
}

RootedForest sample_rooted_forest(const Graph& g, std::uint64_t seed) {
    ForestSampler sampler(g);
    SplitMix64 rng(derive_stream(seed, 0, 0));
    return sampler.sample(rng);
}

DisseminationEstimate estimate_source_probabilities(const Graph& g,
                                                    long long trials,
                                                    std::uint64_t seed) {
    if (trials < 1) {
        throw ValidationError("trials must be >= 1, got " +
                              std::to_string(trials));
    }
    const ForestSampler sampler(g);
    const int n = g.vertex_count();

    DisseminationEstimate est;
    est.n = n;
    est.trials = trials;
    est.source_counts.assign(n, std::vector<std::uint64_t>(n, 0));

    for (long long t = 0; t < trials; ++t) {
        // Stream index 1 keeps trial streams disjoint from the
        // sample_rooted_forest stream (0, 0) under the same master seed.
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t), 1));
        const RootedForest forest = sampler.sample(rng);

        // Rebuild the trees to credit each vertex's root as its source.
        DisjointSet dsu(n);
        for (const auto& [u, v] : forest.edges) dsu.unite(u - 1, v - 1);
        std::vector<int> root_of_rep(static_cast<std::size_t>(n), 0);
        for (int r : forest.roots) root_of_rep[dsu.find(r - 1)] = r;
        for (int v = 1; v <= n; ++v) {
            const int source = root_of_rep[dsu.find(v - 1)];
            ++est.source_counts[source - 1][v - 1];
        }
    }
    return est;
}

}  // namespace forestmatrix
