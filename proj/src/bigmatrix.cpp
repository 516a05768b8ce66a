#include "walkmat/bigmatrix.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <utility>

#include "walkmat/errors.hpp"

namespace walkmat {

BigMatrix::BigMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

BigMatrix::BigMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigVector BigMatrix::column(std::size_t j) const {
  BigVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void BigMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void BigMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

BigMatrix BigMatrix::transpose() const {
  BigMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

BigMatrix BigMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  BigMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

BigMatrix BigMatrix::select(std::span<const std::size_t> row_idx,
                            std::span<const std::size_t> col_idx) const {
  BigMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

bool BigMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::size_t BigMatrix::count_nonzero() const {
  std::size_t c = 0;
  for (const auto& v : data_) c += sgn(v) != 0;
  return c;
}

BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  BigMatrix c(a.rows(), b.cols());
  BigInt t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

BigVector mat_vec(const BigMatrix& a, std::span<const BigInt> v) {
  if (a.cols() != v.size()) throw DimensionError("mat_vec: dimension mismatch");
  BigVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
    }
  }
  return out;
}

BigMatrix diagonal_matrix(std::size_t rows, std::size_t cols, std::span<const BigInt> diag) {
  BigMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) d(i, i) = diag[i];
  return d;
}

BigVector ones(std::size_t n) { return BigVector(n, BigInt(1)); }

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }

  BigInt integer(const char* what) {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(std::string("expected integer for ") + what, start);
    if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(std::string("unexpected character in ") + what, pos_);
    std::string tok = s_.substr(start, pos_ - start);
    if (tok[0] == '+') tok.erase(0, 1);
    return BigInt(tok, 10);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

BigMatrix parse_matrix(const std::string& text) {
  Scanner sc(text);
  BigInt r = sc.integer("row count");
  BigInt c = sc.integer("column count");
  if (sgn(r) < 0 || sgn(c) < 0) throw ParseError("negative matrix dimension", 0);
  if (!r.fits_ulong_p() || !c.fits_ulong_p() || r * c > 100000000)
    throw ParseError("matrix dimensions too large", 0);
  BigMatrix m(r.get_ui(), c.get_ui());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sc.integer("matrix entry");
  if (!sc.at_end()) throw ParseError("trailing data after matrix", sc.pos());
  return m;
}

BigMatrix read_matrix(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_matrix(text);
}

void write_matrix(std::ostream& out, const BigMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).get_str();
    }
    out << '\n';
  }
}

std::string format_matrix(const BigMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

std::vector<std::string> to_decimal(std::span<const BigInt> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace walkmat
