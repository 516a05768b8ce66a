#pragma once

#include <cstddef>
#include <vector>

#include "walkmat/bigmatrix.hpp"

namespace walkmat {

/// Smith normal form with unimodular witnesses: left * M * right == diag(diag).
struct SnfResult {
  BigVector diag;   // min(rows, cols) invariant factors, nonnegative, zeros last
  BigMatrix left;   // rows x rows, det +-1
  BigMatrix right;  // cols x cols, det +-1

  std::size_t rank() const;
  // Product of the first k invariant factors.
  BigInt leading_product(std::size_t k) const;
};

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(const BigMatrix& m);

// Rank over Q by Bareiss elimination with full pivoting.
std::size_t rank_rational(const BigMatrix& m);

// Rank of m with entries reduced mod 2, eliminating over GF(2) on packed rows.
std::size_t rank_mod2(const BigMatrix& m);

// Pivots on the smallest nonzero |entry| of the trailing submatrix; the same
// elementary operations are applied to the witnesses.
SnfResult smith_normal_form(const BigMatrix& m);

// Checks the divisibility chain, sign/zero layout, unimodularity of both
// witnesses, and left * m * right == diag exactly.
bool snf_certificate_holds(const BigMatrix& m, const SnfResult& r);

/// gcd of all k x k minors by brute force, 0 when every minor vanishes.
///
/// This is the independent reference for d_1 * ... * d_k. It enumerates
/// C(rows, k) * C(cols, k) determinants, so keep min(rows, cols) small.
BigInt minor_gcd_oracle(const BigMatrix& m, std::size_t k);

}  // namespace walkmat
