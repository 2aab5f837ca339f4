#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <forestmatrix/enumeration.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/rng.hpp>

namespace forestmatrix {

// Empirical source attribution: source_counts[i][j] is the number of trials
// in which the information unit present at vertex j+1 originated at root
// i+1.  Every column sums to `trials` (each vertex has exactly one source
// per trial); frequencies converge to F.
struct DisseminationEstimate {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> source_counts;
    long long trials = 0;
};

// Uniform sampler over all spanning rooted forests of a fixed graph.
// Construction enumerates the acyclic edge subsets once (edge cap applies)
// and stores cumulative rooted-forest weights; each draw picks a subset
// proportional to its weight (product of tree sizes) and then roots every
// tree uniformly, which is exactly the uniform law on rooted forests.
class ForestSampler {
public:
    explicit ForestSampler(Graph g);

    // |F(G)|, the number of spanning rooted forests.
    std::uint64_t total_forests() const { return total_; }

    // One uniform draw.  Components are rooted in order of their smallest
    // vertex, so a given RNG state always yields the same forest.
    RootedForest sample(SplitMix64& rng) const;

private:
    Graph g_;
    std::vector<std::uint32_t> acyclic_masks_;
    std::vector<std::uint64_t> cumulative_;  // running weight totals
    std::uint64_t total_ = 0;
};

// Single uniform draw with a fresh sampler; convenience over ForestSampler
// for one-off use.
RootedForest sample_rooted_forest(const Graph& g, std::uint64_t seed);

// `trials` independent uniform forests; for each, every vertex credits the
// root of its tree as the source of its information unit.  Trial t draws
// from its own derived RNG stream, so results are independent of any
// batching.
DisseminationEstimate estimate_source_probabilities(const Graph& g,
                                                    long long trials,
                                                    std::uint64_t seed);

}  // namespace forestmatrix
