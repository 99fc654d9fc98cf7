#include "mtcgp/functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mtcgp {

namespace {

using F = FunctionId;

constexpr std::array<FunctionSpec, kFunctionCount> kTable{{
    {F::Add, "ADD", 2, true},
    {F::AMinus, "AMINUS", 2, true},
    {F::Mult, "MULT", 2, true},
    {F::CMult, "CMULT", 1, true},
    {F::Inv, "INV", 1, true},
    {F::Abs, "ABS", 1, true},
    {F::Sqrt, "SQRT", 1, true},
    {F::CPow, "CPOW", 1, true},
    {F::YPow, "YPOW", 2, true},
    {F::ExpX, "EXPX", 1, true},
    {F::SinX, "SINX", 1, true},
    {F::SqrtXY, "SQRTXY", 2, true},
    {F::Acos, "ACOS", 1, true},
    {F::Asin, "ASIN", 1, true},
    {F::Atan, "ATAN", 1, true},
    {F::StdDev, "STDDEV", 1, false},
    {F::Skew, "SKEW", 1, false},
    {F::Kurtosis, "KURTOSIS", 1, false},
    {F::Mean, "MEAN", 1, false},
    {F::Range, "RANGE", 1, false},
    {F::Round, "ROUND", 1, false},
    {F::Ceil, "CEIL", 1, false},
    {F::Floor, "FLOOR", 1, false},
    {F::Max1, "MAX1", 1, false},
    {F::Min1, "MIN1", 1, false},
    {F::Lt, "LT", 2, true},
    {F::Gt, "GT", 2, true},
    {F::Max2, "MAX2", 2, true},
    {F::Min2, "MIN2", 2, true},
    {F::SplitBefore, "SPLIT_BEFORE", 1, false},
    {F::SplitAfter, "SPLIT_AFTER", 1, false},
    {F::RangeIn, "RANGE_IN", 2, false},
    {F::IndexY, "INDEX_Y", 2, false},
    {F::IndexP, "INDEX_P", 1, false},
    {F::Vectorize, "VECTORIZE", 1, false},
    {F::First, "FIRST", 1, false},
    {F::Last, "LAST", 1, false},
    {F::Differences, "DIFFERENCES", 1, false},
    {F::AvgDifferences, "AVG_DIFFERENCES", 1, false},
    {F::Rotate, "ROTATE", 1, false},
    {F::Reverse, "REVERSE", 1, false},
    {F::PushBack, "PUSH_BACK", 2, false},
    {F::PushFront, "PUSH_FRONT", 2, false},
    {F::Set, "SET", 2, false},
    {F::Sum, "SUM", 1, false},
    {F::Transpose, "TRANSPOSE", 1, false},
    {F::VecFromDouble, "VECFROMDOUBLE", 1, false},
    {F::YWire, "YWIRE", 1, false},
    {F::Nop, "NOP", 1, false},
    {F::Const, "CONST", 0, false},
    {F::ConstVectorD, "CONSTVECTORD", 1, false},
    {F::Zeros, "ZEROS", 1, false},
    {F::Ones, "ONES", 1, false},
}};

constexpr bool table_is_ordered() {
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    if (static_cast<std::size_t>(kTable[i].id) != i) return false;
  }
  return true;
}
static_assert(table_is_ordered());

// Element-wise application of a unary scalar formula.
template <class Op>
Value map_unary(Value x, Op op) {
  for (double& e : x.elements()) e = op(e);
  return x;
}

// Broadcasting binary application: scalars pair with every element, two
// matrices are cropped to their common top-left region.
template <class Op>
Value map_binary(const Value& x, const Value& y, Op op) {
  if (x.is_scalar() && y.is_scalar()) {
    return Value::scalar(op(x.scalar_value(), y.scalar_value()));
  }
  if (x.is_scalar()) {
    const double xs = x.scalar_value();
    return map_unary(y, [&](double ye) { return op(xs, ye); });
  }
  if (y.is_scalar()) {
    const double ys = y.scalar_value();
    return map_unary(x, [&](double xe) { return op(xe, ys); });
  }
  const auto rows = std::min(x.rows(), y.rows());
  const auto cols = std::min(x.cols(), y.cols());
  std::vector<double> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.push_back(op(x.at(r, c), y.at(r, c)));
  }
  return Value::matrix(rows, cols, std::move(out));
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double central_moment(std::span<const double> v, double mean, int order) {
  double acc = 0.0;
  for (double e : v) acc += std::pow(e - mean, order);
  return acc / static_cast<double>(v.size());
}

double sample_stddev(std::span<const double> v) {
  const double m = mean_of(v);
  double acc = 0.0;
  for (double e : v) acc += (e - m) * (e - m);
  return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

double skewness(std::span<const double> v) {
  const double m = mean_of(v);
  const double m2 = central_moment(v, m, 2);
  const double m3 = central_moment(v, m, 3);
  return m3 / std::pow(m2, 1.5);
}

double excess_kurtosis(std::span<const double> v) {
  const double m = mean_of(v);
  const double m2 = central_moment(v, m, 2);
  const double m4 = central_moment(v, m, 4);
  return m4 / (m2 * m2) - 3.0;
}

std::vector<double> slice(std::span<const double> v, std::size_t lo, std::size_t hi) {
  return {v.begin() + static_cast<std::ptrdiff_t>(lo),
          v.begin() + static_cast<std::ptrdiff_t>(hi) + 1};
}

std::size_t index_from_signed(double g, std::size_t length) {
  return index_from_unit((g + 1.0) / 2.0, length);
}

std::vector<double> concat(const Value& a, const Value& b) {
  std::vector<double> out(a.elements().begin(), a.elements().end());
  out.insert(out.end(), b.elements().begin(), b.elements().end());
  if (out.size() > kMaxConcatLength) out.resize(kMaxConcatLength);
  return out;
}

Value matrix_function(FunctionId id, const Value& x, const Value& y, double p) {
  const auto xs = x.elements();
  const auto len = xs.size();
  switch (id) {
    case F::StdDev:
      return Value::scalar(sample_stddev(xs));
    case F::Skew:
      return Value::scalar(skewness(xs));
    case F::Kurtosis:
      return Value::scalar(excess_kurtosis(xs));
    case F::Mean:
      return Value::scalar(mean_of(xs));
    case F::Range: {
      const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
      return Value::scalar(*hi - *lo - 1.0);
    }
    case F::Round:
      return map_unary(x, [](double e) { return std::round(e); });
    case F::Ceil:
      return map_unary(x, [](double e) { return std::ceil(e); });
    case F::Floor:
      return map_unary(x, [](double e) { return std::floor(e); });
    case F::Max1:
      return Value::scalar(*std::max_element(xs.begin(), xs.end()));
    case F::Min1:
      return Value::scalar(*std::min_element(xs.begin(), xs.end()));
    case F::SplitBefore:
      return Value::row(slice(xs, 0, index_from_signed(p, len)));
    case F::SplitAfter:
      return Value::row(slice(xs, index_from_signed(p, len), len - 1));
    case F::RangeIn: {
      auto lo = index_from_signed(scalar_of(y), len);
      auto hi = index_from_signed(p, len);
      if (lo > hi) std::swap(lo, hi);
      return Value::row(slice(xs, lo, hi));
    }
    case F::IndexY:
      return Value::scalar(xs[index_from_signed(scalar_of(y), len)]);
    case F::IndexP:
      return Value::scalar(xs[index_from_signed(p, len)]);
    case F::Vectorize:
      return Value::row({xs.begin(), xs.end()});
    case F::First:
      return Value::scalar(xs.front());
    case F::Last:
      return Value::scalar(xs.back());
    case F::Differences:
    case F::AvgDifferences: {
      if (len < 2) return Value::scalar(0.0);
      std::vector<double> diffs(len - 1);
      for (std::size_t i = 0; i + 1 < len; ++i) diffs[i] = xs[i + 1] - xs[i];
      if (id == F::AvgDifferences) return Value::scalar(mean_of(diffs));
      return Value::row(std::move(diffs));
    }
    case F::Rotate: {
      const auto n = static_cast<long long>(len);
      auto k = static_cast<long long>(std::floor(p * static_cast<double>(len))) % n;
      if (k < 0) k += n;
      std::vector<double> out(len);
      for (long long j = 0; j < n; ++j) out[static_cast<std::size_t>((j + k) % n)] = xs[j];
      return Value::matrix(x.rows(), x.cols(), std::move(out));
    }
    case F::Reverse:
      return Value::matrix(x.rows(), x.cols(), {xs.rbegin(), xs.rend()});
    case F::Sum:
      return Value::scalar(std::accumulate(xs.begin(), xs.end(), 0.0));
    case F::Transpose: {
      std::vector<double> out;
      out.reserve(len);
      for (std::size_t c = 0; c < x.cols(); ++c) {
        for (std::size_t r = 0; r < x.rows(); ++r) out.push_back(x.at(r, c));
      }
      return Value::matrix(x.cols(), x.rows(), std::move(out));
    }
    case F::ConstVectorD:
      return Value::filled(x.rows(), x.cols(), p);
    case F::Zeros:
      return Value::filled(x.rows(), x.cols(), 0.0);
    case F::Ones:
      return Value::filled(x.rows(), x.cols(), 1.0);
    default:
      throw std::logic_error("not a matrix function");
  }
}

}  // namespace

std::span<const FunctionSpec> function_table() { return kTable; }

const FunctionSpec& function_spec(FunctionId id) {
  return kTable[static_cast<std::size_t>(id)];
}

const FunctionSpec* find_function(std::string_view name) {
  for (const auto& spec : kTable) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

const FunctionSpec& function_from_gene(double gene) {
  auto idx = static_cast<std::size_t>(std::floor(gene * static_cast<double>(kFunctionCount)));
  return kTable[std::min(idx, kFunctionCount - 1)];
}

bool is_wire_on_scalar(FunctionId id) {
  switch (id) {
    case F::StdDev:
    case F::Skew:
    case F::Kurtosis:
    case F::Mean:
    case F::Range:
    case F::Round:
    case F::Ceil:
    case F::Floor:
    case F::Max1:
    case F::Min1:
    case F::SplitBefore:
    case F::SplitAfter:
    case F::RangeIn:
    case F::IndexY:
    case F::IndexP:
    case F::Vectorize:
    case F::First:
    case F::Last:
    case F::Differences:
    case F::AvgDifferences:
    case F::Rotate:
    case F::Reverse:
    case F::Sum:
    case F::Transpose:
    case F::ConstVectorD:
    case F::Zeros:
    case F::Ones:
      return true;
    default:
      return false;
  }
}

bool reads_x(FunctionId id) { return id != F::Const && id != F::YWire; }

bool reads_y(FunctionId id) {
  return id == F::YWire || function_spec(id).arity == 2;
}

Value apply_raw(const FunctionSpec& spec, const Value& x, const Value& y, double p) {
  using std::numbers::pi;
  if (is_wire_on_scalar(spec.id)) {
    if (x.is_scalar()) return x;
    return matrix_function(spec.id, x, y, p);
  }
  switch (spec.id) {
    case F::Add:
      return map_binary(x, y, [](double a, double b) { return (a + b) / 2.0; });
    case F::AMinus:
      return map_binary(x, y, [](double a, double b) { return std::abs(a - b) / 2.0; });
    case F::Mult:
      return map_binary(x, y, [](double a, double b) { return a * b; });
    case F::CMult:
      return map_unary(x, [p](double a) { return a * p; });
    case F::Inv:
      return map_unary(x, [](double a) { return 1.0 / a; });
    case F::Abs:
      return map_unary(x, [](double a) { return std::abs(a); });
    case F::Sqrt:
      return map_unary(x, [](double a) { return std::sqrt(std::abs(a)); });
    case F::CPow:
      return map_unary(x, [p](double a) { return std::pow(std::abs(a), p + 1.0); });
    case F::YPow:
      return map_binary(x, y,
                        [](double a, double b) { return std::pow(std::abs(a), std::abs(b)); });
    case F::ExpX:
      return map_unary(x, [](double a) {
        return (std::exp(a) - 1.0) / (std::numbers::e - 1.0);
      });
    case F::SinX:
      return map_unary(x, [](double a) { return std::sin(a); });
    case F::SqrtXY:
      return map_binary(x, y, [](double a, double b) {
        return std::sqrt(a * a + b * b) / std::numbers::sqrt2;
      });
    case F::Acos:
      return map_unary(x, [](double a) { return std::acos(a) / pi; });
    case F::Asin:
      return map_unary(x, [](double a) { return 2.0 * std::asin(a) / pi; });
    case F::Atan:
      return map_unary(x, [](double a) { return 4.0 * std::atan(a) / pi; });
    case F::Lt:
      return map_binary(x, y, [](double a, double b) { return a < b ? 1.0 : 0.0; });
    case F::Gt:
      return map_binary(x, y, [](double a, double b) { return a > b ? 1.0 : 0.0; });
    case F::Max2:
      return map_binary(x, y, [](double a, double b) { return std::max(a, b); });
    case F::Min2:
      return map_binary(x, y, [](double a, double b) { return std::min(a, b); });
    case F::PushBack:
      return Value::row(concat(x, y));
    case F::PushFront:
      return Value::row(concat(y, x));
    case F::Set:
      if (x.is_scalar() && y.is_matrix()) {
        return Value::filled(y.rows(), y.cols(), x.scalar_value());
      }
      if (x.is_matrix() && y.is_scalar()) {
        return Value::filled(x.rows(), x.cols(), y.scalar_value());
      }
      return x;
    case F::VecFromDouble:
      if (x.is_scalar()) return Value::matrix(1, 1, {x.scalar_value()});
      return x;
    case F::YWire:
      return y;
    case F::Nop:
      return x;
    case F::Const:
      return Value::scalar(p);
    default:
      throw std::logic_error("unhandled function id");
  }
}

Value apply(const FunctionSpec& spec, const Value& x, const Value& y, double p) {
  Value out = apply_raw(spec, x, y, p);
  for (double& e : out.elements()) e = constrain(p * e);
  return out;
}

}  // namespace mtcgp
