#pragma once

#include <Eigen/Dense>

namespace walkmat {

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k belongs to values(k), orthonormal
  int sweeps = 0;
};

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm falls below
  // off_tolerance * max(1, ||A||_F).
  double off_tolerance = 1e-13;
  int max_sweeps = 100;
};

// Cyclic Jacobi rotations. Throws NumericFailure if max_sweeps is exhausted,
// DimensionError if the input is not square, InvalidParameter if it is not
// symmetric.
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a, const JacobiOptions& opts = {});

}  // namespace walkmat
