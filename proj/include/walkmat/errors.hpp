#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walkmat {

// Argument outside the documented domain of an operation (e.g. D_n with n < 4).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix/vector shapes that do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A partition whose cells do not induce constant neighbour counts.
class NotEquitable : public std::domain_error {
 public:
  NotEquitable(const std::string& msg, std::size_t cell_i, std::size_t cell_j)
      : std::domain_error(msg), cell_i_(cell_i), cell_j_(cell_j) {}
  // 1-based cell indices of the first offending pair.
  std::size_t cell_i() const noexcept { return cell_i_; }
  std::size_t cell_j() const noexcept { return cell_j_; }

 private:
  std::size_t cell_i_;
  std::size_t cell_j_;
};

// Malformed text input; offset is the 0-based byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point input too close to a singularity of a closed form.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The hypotheses of a check do not hold for the given input.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace walkmat
