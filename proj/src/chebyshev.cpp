#include "walkmat/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"

namespace walkmat {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

namespace {

// Shared recurrence: P_{k+1} = 2x P_k - P_{k-1} from the given P_0, P_1.
IntPolynomial three_term(int n, std::vector<BigInt> p0, std::vector<BigInt> p1) {
  if (n < 0) throw InvalidParameter("Chebyshev degree must be nonnegative");
  if (n == 0) return IntPolynomial(std::move(p0));
  for (int k = 1; k < n; ++k) {
    std::vector<BigInt> next(p1.size() + 1);
    for (std::size_t i = 0; i < p1.size(); ++i) next[i + 1] = 2 * p1[i];
    for (std::size_t i = 0; i < p0.size(); ++i) next[i] -= p0[i];
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return IntPolynomial(std::move(p1));
}

}  // namespace

IntPolynomial chebyshev_t(int n) { return three_term(n, {BigInt(1)}, {BigInt(0), BigInt(1)}); }

IntPolynomial chebyshev_u(int n) { return three_term(n, {BigInt(1)}, {BigInt(0), BigInt(2)}); }

BigMatrix sylvester_matrix(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidParameter("Sylvester matrix of a zero polynomial");
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  const std::size_t size = dp + dq;
  BigMatrix s(size, size);
  // dq shifted copies of p, then dp shifted copies of q; highest degree first
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) s(r, r + k) = p.coeffs()[dp - k];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) s(dq + r, r + k) = q.coeffs()[dq - k];
  return s;
}

BigInt resultant(const IntPolynomial& p, const IntPolynomial& q) {
  return det_bareiss(sylvester_matrix(p, q));
}

BigInt discriminant(const IntPolynomial& p) {
  if (p.degree() < 1) throw InvalidParameter("discriminant needs a polynomial of degree >= 1");
  const long n = p.degree();
  BigInt res = resultant(p, p.derivative());
  BigInt d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);

// Accumulates log|factor| and the parity of negative factors.
struct LogProduct {
  double log_abs = 0.0;
  int sign = 1;
  void mul(double f) {
    if (f == 0.0) {
      sign = 0;
      log_abs = -INFINITY;
      return;
    }
    if (f < 0) sign = -sign;
    log_abs += std::log(std::abs(f));
  }
};

IdentityCheck finish(std::string name, int param, const LogProduct& lhs, double log_rhs, double tol) {
  IdentityCheck c;
  c.name = std::move(name);
  c.param = param;
  c.sign = lhs.sign;
  c.residual = lhs.sign == 0 ? INFINITY : std::abs(lhs.log_abs - log_rhs);
  c.pass = c.residual < tol;
  return c;
}

}  // namespace

IdentityCheck check_root_difference_product(int m, double tol) {
  if (m < 1) throw InvalidParameter("root difference product needs m >= 1");
  LogProduct lhs;
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k < j; ++k)
      lhs.mul(2.0 * std::cos((2 * j - 1) * kPi / (2.0 * m)) -
              2.0 * std::cos((2 * k - 1) * kPi / (2.0 * m)));
  const double log_rhs = 0.5 * (m - 1) * kLn2 + 0.5 * m * std::log(static_cast<double>(m));
  return finish("root_difference_product", m, lhs, log_rhs, tol);
}

std::array<IdentityCheck, 2> check_cos_products(int m, double tol) {
  if (m < 1) throw InvalidParameter("cosine products need m >= 1");
  LogProduct odd;
  LogProduct whole;
  for (int j = 1; j <= 4 * m; ++j) {
    odd.mul(std::cos((2 * j - 1) * kPi / (8.0 * m)));
    whole.mul(std::cos(j * kPi / (4.0 * m + 1.0)));
  }
  return {finish("cos_product_odd_8m", m, odd, (1 - 4 * m) * kLn2, tol),
          finish("cos_product_4m_plus_1", m, whole, -4.0 * m * kLn2, tol)};
}

IdentityCheck check_sin_product(int m, double tol) {
  if (m < 2) throw InvalidParameter("sine product needs m >= 2");
  LogProduct lhs;
  for (int k = 1; k <= m - 1; ++k) lhs.mul(std::sin((2 * k - 1) * kPi / (4.0 * (m - 1))));
  return finish("sin_product", m, lhs, (1.5 - m) * kLn2, tol);
}

IdentityCheck check_cos_sum(double a, double b, double x, int m, double tol) {
  if (m < 0) throw InvalidParameter("cosine sum needs m >= 0");
  const double half = std::sin(0.5 * a * x);
  if (std::abs(half) < 1e-12) throw DomainError("cosine sum closed form is singular: sin(ax/2) ~ 0");
  double direct = 0.0;
  for (int k = 1; k <= m; ++k) direct += std::cos((a * k + b) * x);
  const double closed = (std::sin(((m + 0.5) * a + b) * x) - std::sin((0.5 * a + b) * x)) / (2.0 * half);
  IdentityCheck c;
  c.name = "cos_sum";
  c.param = m;
  c.residual = std::abs(direct - closed);
  c.sign = direct > 0 ? 1 : (direct < 0 ? -1 : 0);
  c.pass = c.residual < tol;
  return c;
}

}  // namespace walkmat
