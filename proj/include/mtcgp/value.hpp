#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mtcgp {

// A node value: either a real scalar or a rows x cols matrix stored row-major.
// Matrices are never empty.
class Value {
 public:
  Value() = default;

  static Value scalar(double v);
  static Value matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  static Value filled(std::size_t rows, std::size_t cols, double v);
  // 1 x n row vector.
  static Value row(std::vector<double> data);

  bool is_scalar() const { return rows_ == 0; }
  bool is_matrix() const { return rows_ != 0; }

  // Precondition: is_scalar().
  double scalar_value() const { return scalar_; }

  std::size_t rows() const { return is_scalar() ? 1 : rows_; }
  std::size_t cols() const { return is_scalar() ? 1 : cols_; }
  std::size_t size() const { return is_scalar() ? 1 : data_.size(); }

  // Row-major element view; a scalar is a single element.
  std::span<const double> elements() const {
    return is_scalar() ? std::span<const double>(&scalar_, 1)
                       : std::span<const double>(data_);
  }
  std::span<double> elements() {
    return is_scalar() ? std::span<double>(&scalar_, 1) : std::span<double>(data_);
  }

  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Value& a, const Value& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.scalar_ == b.scalar_ &&
           a.data_ == b.data_;
  }

 private:
  double scalar_ = 0.0;
  std::size_t rows_ = 0;  // 0 marks a scalar
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Replaces non-finite elements with 0 and clamps the rest to [-1, 1].
double constrain(double e);
Value constrain(Value v);

// Scalars pass through; matrices reduce to the mean of their elements.
double scalar_of(const Value& v);

// Top-left submatrices of a and b sharing the minimum of each dimension.
std::pair<Value, Value> crop_to_common(const Value& a, const Value& b);

// min(floor(u * length), length - 1).
std::size_t index_from_unit(double u, std::size_t length);

}  // namespace mtcgp
