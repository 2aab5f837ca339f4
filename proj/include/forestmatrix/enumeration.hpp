#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <forestmatrix/bigint.hpp>
#include <forestmatrix/forest_exact.hpp>
#include <forestmatrix/graph.hpp>

namespace forestmatrix {

// Brute-force enumeration walks all 2^|E| edge subsets; this cap keeps the
// walk to at most ~1M subsets.
inline constexpr int kEnumerationEdgeCap = 20;

// One spanning rooted forest: an acyclic edge subset plus exactly one root
// per connected component (isolated vertices are single-vertex trees and are
// their own roots).  `roots` is ordered by component, components ordered by
// their smallest vertex.
struct RootedForest {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> roots;

    bool operator==(const RootedForest&) const = default;
};

// Restriction on which rooted forests to count.
//   required_roots:     every listed vertex must be the root of its tree.
//   same_tree_rooted_at: pair (i, j) meaning vertex j lies in the tree
//                        rooted at i (i == j is allowed and means "i is a
//                        root").
struct ForestConstraint {
    std::vector<int> required_roots;
    std::optional<std::pair<int, int>> same_tree_rooted_at;
};

// All spanning rooted forests of g, each exactly once, in lexicographic
// order of (edge-subset bitmask, root tuple).  Bit k of the bitmask selects
// the k-th edge of g.edges(); the root tuple is ordered by component and
// advances its last position fastest.
// Throws ResourceLimitError when |E| exceeds kEnumerationEdgeCap.
std::vector<RootedForest> enumerate_rooted_forests(const Graph& g);

// Number of spanning rooted forests satisfying the constraint.  Throws
// ValidationError when a constraint names a vertex outside the graph and
// ResourceLimitError over the edge cap.
BigInt count_forests_constrained(const Graph& g, const ForestConstraint& c);

// Oracle counterpart of forest_matrix_exact: f and every f_ij accumulated
// in a single pass over the edge subsets.  The subset space may be split
// across `workers` threads; results are identical for any worker count.
ForestCountMatrix forest_matrix_by_enumeration(const Graph& g,
                                               int workers = 1);

}  // namespace forestmatrix
