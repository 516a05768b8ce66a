#pragma once

#include <array>
#include <string>
#include <vector>

#include "walkmat/bigmatrix.hpp"

namespace walkmat {

/// Dense univariate polynomial with arbitrary-precision coefficients.
/// coeffs()[k] is the coefficient of x^k; trailing zeros are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }
  BigInt constant_term() const { return is_zero() ? BigInt(0) : coeffs_.front(); }

  IntPolynomial derivative() const;
  double evaluate(double x) const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Three-term recurrences T_{k+1} = 2x T_k - T_{k-1}, U_{k+1} = 2x U_k - U_{k-1}.
IntPolynomial chebyshev_t(int n);
IntPolynomial chebyshev_u(int n);

BigMatrix sylvester_matrix(const IntPolynomial& p, const IntPolynomial& q);
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

// (-1)^{n(n-1)/2} Res(P, P') / a_n, which equals a_n^{2n-2} prod (r_j - r_k)^2.
BigInt discriminant(const IntPolynomial& p);

struct IdentityCheck {
  std::string name;
  int param = 0;
  bool pass = false;
  // Log-magnitude difference for the products, absolute difference for the sum.
  double residual = 0.0;
  // Empirical sign of the evaluated left-hand side (+1, -1 or 0).
  int sign = 0;
};

inline constexpr double kIdentityTolerance = 1e-9;

// prod_{k<j} (2cos((2j-1)pi/2m) - 2cos((2k-1)pi/2m)) against 2^{(m-1)/2} m^{m/2}.
IdentityCheck check_root_difference_product(int m, double tol = kIdentityTolerance);

// [0]: prod_{j=1}^{4m} cos((2j-1)pi/8m) = 2^{1-4m}
// [1]: prod_{j=1}^{4m} cos(j pi/(4m+1)) = 2^{-4m}
std::array<IdentityCheck, 2> check_cos_products(int m, double tol = kIdentityTolerance);

// prod_{k=1}^{m-1} sin((2k-1)pi/(4(m-1))) = 2^{3/2-m}; requires m >= 2.
IdentityCheck check_sin_product(int m, double tol = kIdentityTolerance);

// sum_{k=1}^{m} cos((ak+b)x) against the telescoped closed form.
// Throws DomainError when |sin(ax/2)| < 1e-12.
IdentityCheck check_cos_sum(double a, double b, double x, int m, double tol = kIdentityTolerance);

}  // namespace walkmat
