#include <forestmatrix/enumeration.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <thread>

#include <forestmatrix/disjoint_set.hpp>
#include <forestmatrix/errors.hpp>

#include "subsets.hpp"

namespace forestmatrix {

using detail::build_subset;
using detail::check_edge_cap;
using detail::components_of;

namespace {

void check_constraint_vertices(const Graph& g, const ForestConstraint& c) {
    const int n = g.vertex_count();
    auto check = [n](int v) {
        if (v < 1 || v > n) {
            throw ValidationError("constraint references vertex " +
                                  std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
        }
    };
    for (int v : c.required_roots) check(v);
    if (c.same_tree_rooted_at) {
        check(c.same_tree_rooted_at->first);
        check(c.same_tree_rooted_at->second);
    }
}

}  // namespace

std::vector<RootedForest> enumerate_rooted_forests(const Graph& g) {
    check_edge_cap(g);
    const auto& edges = g.edges();
    const std::uint32_t subsets = 1u << edges.size();

    std::vector<RootedForest> forests;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        DisjointSet dsu(g.vertex_count());
        if (!build_subset(g, mask, dsu)) continue;

        std::vector<std::pair<int, int>> chosen;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (mask >> k & 1u) chosen.push_back(edges[k]);
        }

        // Odometer over one root choice per component, last position
        // fastest, so root tuples come out in lexicographic order.
        const auto comps = components_of(g, dsu);
        std::vector<std::size_t> pick(comps.size(), 0);
        while (true) {
            RootedForest forest;
            forest.edges = chosen;
            forest.roots.reserve(comps.size());
            for (std::size_t c = 0; c < comps.size(); ++c) {
                forest.roots.push_back(comps[c][pick[c]]);
            }
            forests.push_back(std::move(forest));

            std::size_t c = comps.size();
            while (c > 0 && ++pick[c - 1] == comps[c - 1].size()) {
                pick[--c] = 0;
            }
            if (c == 0) break;
        }
    }
    return forests;
}

BigInt count_forests_constrained(const Graph& g, const ForestConstraint& c) {
    check_edge_cap(g);
    check_constraint_vertices(g, c);
    const int n = g.vertex_count();
    const std::uint32_t subsets = 1u << g.edge_count();

    // Each acyclic subset contributes at most 2^20 rooted forests (product
    // of tree sizes, maximised by twenty disjoint edges) and there are at
    // most 2^20 subsets, so totals stay below 2^40: unsigned 64-bit
    // accumulation cannot overflow under the edge cap.
    std::uint64_t total = 0;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        DisjointSet dsu(n);
        if (!build_subset(g, mask, dsu)) continue;

        // Pin down the forced root of a component, if any; a conflict means
        // this subset admits no valid rooting.
        std::map<int, int> forced_root;  // component rep -> root vertex
        bool feasible = true;
        if (c.same_tree_rooted_at) {
            const auto [i, j] = *c.same_tree_rooted_at;
            if (!dsu.connected(i - 1, j - 1)) continue;
            forced_root[dsu.find(i - 1)] = i;
        }
        for (int r : c.required_roots) {
            const auto [it, fresh] = forced_root.try_emplace(dsu.find(r - 1), r);
            if (!fresh && it->second != r) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        std::uint64_t ways = 1;
        for (int v = 0; v < n; ++v) {
            if (dsu.find(v) != v) continue;  // visit each component once
            if (!forced_root.count(v)) {
                ways *= static_cast<std::uint64_t>(dsu.component_size(v));
            }
        }
        total += ways;
    }
    return BigInt(total);
}

ForestCountMatrix forest_matrix_by_enumeration(const Graph& g, int workers) {
    check_edge_cap(g);
    const int n = g.vertex_count();
    const std::uint32_t subsets = 1u << g.edge_count();
    if (workers < 1) workers = 1;
    if (static_cast<std::uint32_t>(workers) > subsets) {
        workers = static_cast<int>(subsets);
    }

    // Same bound as in count_forests_constrained: every accumulator stays
    // below 2^40 under the edge cap, so plain 64-bit integers suffice.
    struct Accumulator {
        std::uint64_t f = 0;
        std::vector<std::uint64_t> counts;
    };
    std::vector<Accumulator> partial(workers);

    auto run = [&](int w, std::uint32_t begin, std::uint32_t end) {
        Accumulator& acc = partial[w];
        acc.counts.assign(static_cast<std::size_t>(n) * n, 0);
        for (std::uint32_t mask = begin; mask < end; ++mask) {
            DisjointSet dsu(n);
            if (!build_subset(g, mask, dsu)) continue;
            const auto comps = components_of(g, dsu);

            std::uint64_t weight = 1;  // rooted forests from this subset
            for (const auto& comp : comps) weight *= comp.size();
            acc.f += weight;

            for (const auto& comp : comps) {
                // Rootings with a fixed root in this component: one choice
                // here, free choices everywhere else.
                const std::uint64_t rest = weight / comp.size();
                for (int root : comp) {
                    auto* row =
                        &acc.counts[static_cast<std::size_t>(root - 1) * n];
                    for (int v : comp) row[v - 1] += rest;
                }
            }
        }
    };

    if (workers == 1) {
        run(0, 0, subsets);
    } else {
        // Contiguous blocks; integer merging makes the result independent
        // of the split.
        std::vector<std::thread> pool;
        const std::uint32_t chunk = subsets / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint32_t begin = chunk * static_cast<std::uint32_t>(w);
            const std::uint32_t end =
                (w + 1 == workers) ? subsets : begin + chunk;
            pool.emplace_back(run, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    std::uint64_t f = 0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) * n, 0);
    for (const auto& acc : partial) {
        f += acc.f;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            counts[k] += acc.counts[k];
        }
    }

    ForestCountMatrix out;
    out.n = n;
    out.f = BigInt(f);
    out.counts = IntegerMatrix(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.counts(i, j) =
                BigInt(counts[static_cast<std::size_t>(i) * n + j]);
        }
    }
    return out;
}

}  // namespace forestmatrix
