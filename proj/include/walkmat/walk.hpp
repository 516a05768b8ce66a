#pragma once

#include <cstddef>

#include "walkmat/bigmatrix.hpp"
#include "walkmat/graph.hpp"

namespace walkmat {

struct WalkPair {
  BigMatrix walk;  // n x n, column j is A^j e (0-based j)
  BigMatrix hat;   // walk without its first row and last column
};

// [e, Me, ..., M^{m-1} e] by repeated matrix-vector products.
BigMatrix walk_matrix(const BigMatrix& m);

// Removes the first row and the last column.
BigMatrix truncate_walk(const BigMatrix& w);

BigMatrix hat_walk_matrix(const Graph& g);
WalkPair walk_pair(const Graph& g);

// Number of main eigenvalues as rank W(G) over Q.
std::size_t main_eigenvalue_count_exact(const Graph& g);

// Counts eigenvalue clusters (gap <= tol) of A whose eigenspace carries a
// projection of e with norm > tol * sqrt(n). Throws InvalidParameter for
// tol <= 0 and NumericFailure when the eigensolver does not converge.
std::size_t main_eigenvalue_count_numeric(const Graph& g, double tol = 1e-8);

}  // namespace walkmat
