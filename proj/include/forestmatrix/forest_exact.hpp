#pragma once

#include <forestmatrix/bigint.hpp>
#include <forestmatrix/graph.hpp>
#include <forestmatrix/matrix.hpp>

namespace forestmatrix {

// Total number f of spanning rooted forests together with the matrix of
// counts f_ij = number of spanning rooted forests in which vertex j lies in
// the tree rooted at i.  Equivalently: f = det(I+L), counts = adj(I+L).
//
// Invariants (asserted by construction and exercised in tests):
//   - counts is symmetric with strictly positive diagonal,
//   - every row and column of counts sums to f,
//   - (I+L) * counts == f * I exactly.
struct ForestCountMatrix {
    int n = 0;
    BigInt f = 1;
    IntegerMatrix counts;  // counts(i-1, j-1) == f_ij for vertices i, j
};

// The doubly stochastic graph matrix F = (f_ij)/f with every entry an exact
// rational in lowest terms.  Symmetric, entries in [0,1], all row and column
// sums exactly 1, positive definite.
struct ProximityMatrix {
    int n = 0;
    RationalMatrix entries;
};

// Exact f and (f_ij) for an arbitrary graph: fraction-free determinant of
// I+L plus its adjugate via exact rational inversion.  Never fails on a
// valid graph since det(I+L) >= 1.
ForestCountMatrix forest_matrix_exact(const Graph& g);

// F = counts/f, reduced to lowest terms entrywise.
ProximityMatrix proximity_matrix(const ForestCountMatrix& fc);

// Number of spanning trees via a cofactor of the Laplacian (matrix-tree
// theorem).  Returns 0 for disconnected graphs and 1 for the single vertex.
BigInt count_spanning_trees(const Graph& g);

}  // namespace forestmatrix
