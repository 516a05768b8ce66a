#include "walkmat/walk.hpp"

#include <cmath>

#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"
#include "walkmat/jacobi.hpp"

namespace walkmat {

BigMatrix walk_matrix(const BigMatrix& m) {
  if (!m.square()) throw DimensionError("walk_matrix: matrix is not square");
  const std::size_t n = m.rows();
  BigMatrix w(n, n);
  BigVector col = ones(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) col = mat_vec(m, col);
    for (std::size_t i = 0; i < n; ++i) w(i, j) = col[i];
  }
  return w;
}

BigMatrix truncate_walk(const BigMatrix& w) {
  if (w.rows() < 2 || w.cols() < 2) throw DimensionError("truncate_walk: need at least 2x2");
  return w.block(1, 0, w.rows() - 1, w.cols() - 1);
}

BigMatrix hat_walk_matrix(const Graph& g) {
  if (g.order() < 2) throw DimensionError("hat_walk_matrix: graph needs at least 2 vertices");
  return truncate_walk(walk_matrix(adjacency_matrix(g)));
}

WalkPair walk_pair(const Graph& g) {
  if (g.order() < 2) throw DimensionError("walk_pair: graph needs at least 2 vertices");
  WalkPair p;
  p.walk = walk_matrix(adjacency_matrix(g));
  p.hat = truncate_walk(p.walk);
  return p;
}

std::size_t main_eigenvalue_count_exact(const Graph& g) {
  return rank_rational(walk_matrix(adjacency_matrix(g)));
}

std::size_t main_eigenvalue_count_numeric(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("main_eigenvalue_count_numeric: tol must be positive");
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u - 1), static_cast<Eigen::Index>(v - 1)) = 1.0;
    a(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(u - 1)) = 1.0;
  }
  const SymmetricEigen eig = jacobi_eigen(a);
  const Eigen::VectorXd e = Eigen::VectorXd::Ones(n);
  const double threshold = tol * std::sqrt(static_cast<double>(n));

  std::size_t count = 0;
  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index end = k + 1;
    while (end < n && eig.values(end) - eig.values(end - 1) <= tol) ++end;
    // eigenvectors are orthonormal, so the projection norm is the root of
    // the summed squared coefficients
    double sq = 0.0;
    for (Eigen::Index c = k; c < end; ++c) {
      const double coef = eig.vectors.col(c).dot(e);
      sq += coef * coef;
    }
    if (std::sqrt(sq) > threshold) ++count;
    k = end;
  }
  return count;
}

}  // namespace walkmat
