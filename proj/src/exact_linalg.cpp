#include "walkmat/exact_linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "walkmat/errors.hpp"

namespace walkmat {

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const BigInt& d) { return sgn(d) != 0; }));
}

BigInt SnfResult::leading_product(std::size_t k) const {
  BigInt p = 1;
  for (std::size_t i = 0; i < k && i < diag.size(); ++i) p *= diag[i];
  return p;
}

BigInt det_bareiss(const BigMatrix& m) {
  if (!m.square()) throw DimensionError("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  BigInt t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    const BigInt& piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), a(i, j).get_mpz_t(), piv.get_mpz_t());
        mpz_submul(t.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
  }
  BigInt d = a(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

std::size_t rank_rational(const BigMatrix& m) {
  BigMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt prev = 1;
  BigInt t;
  std::size_t r = 0;
  while (r < rows && r < cols) {
    // full pivoting; the smallest entry keeps the products short
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    a.swap_rows(r, pi);
    a.swap_cols(r, pj);
    const BigInt& piv = a(r, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), a(i, j).get_mpz_t(), piv.get_mpz_t());
        mpz_submul(t.get_mpz_t(), a(i, r).get_mpz_t(), a(r, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, r) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::size_t rank_mod2(const BigMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (mpz_odd_p(m(i, j).get_mpz_t())) bits[i][j / 64] |= std::uint64_t{1} << (j % 64);

  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols && rank < rows; ++j) {
    const std::size_t w = j / 64;
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    std::size_t p = rank;
    while (p < rows && !(bits[p][w] & mask)) ++p;
    if (p == rows) continue;
    std::swap(bits[p], bits[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != rank && (bits[i][w] & mask)) {
        for (std::size_t k = w; k < words; ++k) bits[i][k] ^= bits[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Quotient of a / b rounded to nearest, so the remainder satisfies |r| <= |b|/2.
void nearest_quotient(BigInt& q, const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) == 0) return;
  BigInt twice = 2 * abs(r);
  if (cmpabs(twice, b) > 0) {
    if ((sgn(r) > 0) == (sgn(b) > 0))
      ++q;
    else
      --q;
  }
}

// Working state of the Smith reduction: a = left * m * right at all times.
struct SnfState {
  BigMatrix a;
  BigMatrix left;
  BigMatrix right;

  // row_i -= q * row_t
  void row_axpy(std::size_t i, std::size_t t, const BigInt& q, std::size_t from_col) {
    for (std::size_t j = from_col; j < a.cols(); ++j)
      if (sgn(a(t, j)) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(t, j).get_mpz_t());
    for (std::size_t j = 0; j < left.cols(); ++j)
      if (sgn(left(t, j)) != 0)
        mpz_submul(left(i, j).get_mpz_t(), q.get_mpz_t(), left(t, j).get_mpz_t());
  }

  // col_j -= q * col_t
  void col_axpy(std::size_t j, std::size_t t, const BigInt& q, std::size_t from_row) {
    for (std::size_t i = from_row; i < a.rows(); ++i)
      if (sgn(a(i, t)) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, t).get_mpz_t());
    for (std::size_t i = 0; i < right.rows(); ++i)
      if (sgn(right(i, t)) != 0)
        mpz_submul(right(i, j).get_mpz_t(), q.get_mpz_t(), right(i, t).get_mpz_t());
  }

  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    left.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    right.swap_cols(x, y);
  }

  // Clear column t below the pivot. Returns false if a nonzero remainder was
  // swapped into the pivot position (the caller must repeat).
  bool clear_column(std::size_t t) {
    BigInt q;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (sgn(a(i, t)) == 0) continue;
      nearest_quotient(q, a(i, t), a(t, t));
      row_axpy(i, t, q, t);
    }
    std::size_t best = a.rows();
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      if (sgn(a(i, t)) != 0 && (best == a.rows() || cmpabs(a(i, t), a(best, t)) < 0)) best = i;
    if (best == a.rows()) return true;
    swap_rows(t, best);
    return false;
  }

  bool clear_row(std::size_t t) {
    BigInt q;
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (sgn(a(t, j)) == 0) continue;
      nearest_quotient(q, a(t, j), a(t, t));
      col_axpy(j, t, q, t);
    }
    std::size_t best = a.cols();
    for (std::size_t j = t + 1; j < a.cols(); ++j)
      if (sgn(a(t, j)) != 0 && (best == a.cols() || cmpabs(a(t, j), a(t, best)) < 0)) best = j;
    if (best == a.cols()) return true;
    swap_cols(t, best);
    return false;
  }

  // Row of the trailing block holding an entry not divisible by the pivot.
  std::size_t non_divisible_row(std::size_t t) const {
    for (std::size_t i = t + 1; i < a.rows(); ++i)
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) return i;
    return a.rows();
  }
};

}  // namespace

SnfResult smith_normal_form(const BigMatrix& m) {
  SnfState s{m, BigMatrix::identity(m.rows()), BigMatrix::identity(m.cols())};
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(s.a(i, j)) != 0 && (pi == rows || cmpabs(s.a(i, j), s.a(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    while (true) {
      if (!s.clear_column(t)) continue;
      if (!s.clear_row(t)) continue;
      const std::size_t bad = s.non_divisible_row(t);
      if (bad == rows) break;
      // row_t += row_bad brings a non-multiple into row t; the next row
      // clearing leaves a strictly smaller pivot.
      BigInt minus_one = -1;
      s.row_axpy(t, bad, minus_one, t);
    }
    if (sgn(s.a(t, t)) < 0) {
      for (std::size_t j = t; j < cols; ++j) s.a(t, j) = -s.a(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.left(t, j) = -s.left(t, j);
    }
  }

  SnfResult out;
  out.diag.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diag[i] = s.a(i, i);
  out.left = std::move(s.left);
  out.right = std::move(s.right);
  return out;
}

bool snf_certificate_holds(const BigMatrix& m, const SnfResult& r) {
  const std::size_t steps = std::min(m.rows(), m.cols());
  if (r.diag.size() != steps) return false;
  if (r.left.rows() != m.rows() || !r.left.square()) return false;
  if (r.right.rows() != m.cols() || !r.right.square()) return false;
  for (std::size_t i = 0; i < steps; ++i) {
    if (sgn(r.diag[i]) < 0) return false;
    if (i + 1 < steps &&
        !mpz_divisible_p(r.diag[i + 1].get_mpz_t(), r.diag[i].get_mpz_t()))
      return false;
  }
  if (abs(det_bareiss(r.left)) != 1 || abs(det_bareiss(r.right)) != 1) return false;
  return mat_mul(mat_mul(r.left, m), r.right) ==
         diagonal_matrix(m.rows(), m.cols(), r.diag);
}

namespace {

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BigInt minor_gcd_oracle(const BigMatrix& m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols()))
    throw DimensionError("minor size " + std::to_string(k) + " exceeds matrix dimensions");
  if (k == 0) return 1;
  BigInt g = 0;
  std::vector<std::size_t> ri(k);
  std::iota(ri.begin(), ri.end(), 0);
  do {
    std::vector<std::size_t> ci(k);
    std::iota(ci.begin(), ci.end(), 0);
    do {
      const BigInt d = det_bareiss(m.select(ri, ci));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) return g;
    } while (next_combination(ci, m.cols()));
  } while (next_combination(ri, m.rows()));
  return g;
}

}  // namespace walkmat
