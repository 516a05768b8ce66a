#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace walkmat {

using BigInt = mpz_class;
using BigVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Indexing is 0-based internally; every public interface that talks about
/// vertices uses 1-based labels and converts at the boundary.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(std::size_t rows, std::size_t cols);
  BigMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static BigMatrix identity(std::size_t n);
  static BigMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<BigInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  BigVector column(std::size_t j) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  BigMatrix transpose() const;
  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  BigMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  // Copy with the listed 0-based rows and columns kept, in the given order.
  BigMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  bool is_symmetric() const;
  std::size_t count_nonzero() const;

  friend bool operator==(const BigMatrix& a, const BigMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b);
BigVector mat_vec(const BigMatrix& a, std::span<const BigInt> v);
BigMatrix diagonal_matrix(std::size_t rows, std::size_t cols, std::span<const BigInt> diag);
BigVector ones(std::size_t n);

// Matrix text format: "rows cols" on the first line, then one line of
// space-separated decimal integers per row.
BigMatrix read_matrix(std::istream& in);
BigMatrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const BigMatrix& m);
std::string format_matrix(const BigMatrix& m);

std::vector<std::string> to_decimal(std::span<const BigInt> v);

}  // namespace walkmat
