#include "mtcgp/value.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mtcgp {

Value Value::scalar(double v) {
  Value out;
  out.scalar_ = v;
  return out;
}

Value Value::matrix(std::size_t rows, std::size_t cols, std::vector<double> data) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (data.size() != rows * cols) {
    throw std::invalid_argument("matrix data size does not match dimensions");
  }
  Value out;
  out.rows_ = rows;
  out.cols_ = cols;
  out.data_ = std::move(data);
  return out;
}

Value Value::filled(std::size_t rows, std::size_t cols, double v) {
  return matrix(rows, cols, std::vector<double>(rows * cols, v));
}

Value Value::row(std::vector<double> data) {
  const auto n = data.size();
  return matrix(1, n, std::move(data));
}

double constrain(double e) {
  if (!std::isfinite(e)) return 0.0;
  return std::min(1.0, std::max(-1.0, e));
}

Value constrain(Value v) {
  for (double& e : v.elements()) e = constrain(e);
  return v;
}

double scalar_of(const Value& v) {
  if (v.is_scalar()) return v.scalar_value();
  const auto els = v.elements();
  return std::accumulate(els.begin(), els.end(), 0.0) / static_cast<double>(els.size());
}

namespace {

Value top_left(const Value& m, std::size_t rows, std::size_t cols) {
  if (m.rows() == rows && m.cols() == cols) return m;
  std::vector<double> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) data.push_back(m.at(r, c));
  }
  return Value::matrix(rows, cols, std::move(data));
}

}  // namespace

std::pair<Value, Value> crop_to_common(const Value& a, const Value& b) {
  if (!a.is_matrix() || !b.is_matrix()) {
    throw std::invalid_argument("crop_to_common expects two matrices");
  }
  const auto rows = std::min(a.rows(), b.rows());
  const auto cols = std::min(a.cols(), b.cols());
  return {top_left(a, rows, cols), top_left(b, rows, cols)};
}

std::size_t index_from_unit(double u, std::size_t length) {
  if (length == 0) throw std::invalid_argument("index_from_unit on empty range");
  if (!(u > 0.0)) return 0;  // also catches NaN
  const double scaled = std::floor(u * static_cast<double>(length));
  if (scaled >= static_cast<double>(length - 1)) return length - 1;
  return static_cast<std::size_t>(scaled);
}

}  // namespace mtcgp
