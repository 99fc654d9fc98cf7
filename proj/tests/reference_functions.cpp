#include "reference_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mtcgp::reference {

Operand from_value(const Value& value) {
  Operand op;
  op.matrix = value.is_matrix();
  op.rows = value.rows();
  op.cols = value.cols();
  op.v.assign(value.elements().begin(), value.elements().end());
  return op;
}

Value to_value(const Operand& op) {
  if (!op.matrix) return Value::scalar(op.v.at(0));
  return Value::matrix(op.rows, op.cols, op.v);
}

namespace {

Operand scalar(double s) { return Operand{false, 1, 1, {s}}; }

Operand mat(std::size_t rows, std::size_t cols, std::vector<double> v) {
  return Operand{true, rows, cols, std::move(v)};
}

Operand row(std::vector<double> v) {
  const auto n = v.size();
  return mat(1, n, std::move(v));
}

double scalar_value(const Operand& op) {
  if (!op.matrix) return op.v[0];
  double s = 0.0;
  for (double e : op.v) s += e;
  return s / static_cast<double>(op.v.size());
}

std::size_t pick(double g, std::size_t len) {
  // (g + 1) / 2 in [0, 1], times len, floored, last index at u = 1
  const double u = (g + 1.0) / 2.0;
  if (u <= 0.0 || std::isnan(u)) return 0;
  const double f = std::floor(u * static_cast<double>(len));
  return f >= static_cast<double>(len - 1) ? len - 1 : static_cast<std::size_t>(f);
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e;
  return s / static_cast<double>(v.size());
}

double moment(const std::vector<double>& v, double m, int k) {
  double s = 0.0;
  for (double e : v) s += std::pow(e - m, k);
  return s / static_cast<double>(v.size());
}

// f for the broadcasting functions at one element pair.
double scalar_formula(int id, double x, double y, double p) {
  switch (id) {
    case 0: return (x + y) / 2.0;
    case 1: return std::abs(x - y) / 2.0;
    case 2: return x * y;
    case 3: return x * p;
    case 4: return 1.0 / x;
    case 5: return std::abs(x);
    case 6: return std::sqrt(std::abs(x));
    case 7: return std::pow(std::abs(x), p + 1.0);
    case 8: return std::pow(std::abs(x), std::abs(y));
    case 9: return (std::exp(x) - 1.0) / (std::numbers::e - 1.0);
    case 10: return std::sin(x);
    case 11: return std::sqrt(x * x + y * y) / std::numbers::sqrt2;
    case 12: return std::acos(x) / std::numbers::pi;
    case 13: return 2.0 * std::asin(x) / std::numbers::pi;
    case 14: return 4.0 * std::atan(x) / std::numbers::pi;
    case 25: return x < y ? 1.0 : 0.0;
    case 26: return x > y ? 1.0 : 0.0;
    case 27: return x > y ? x : y;
    case 28: return x < y ? x : y;
    default: throw std::logic_error("not a broadcasting function");
  }
}

bool broadcasting(int id) { return id <= 14 || (id >= 25 && id <= 28); }
bool binary(int id) { return id == 0 || id == 1 || id == 2 || id == 8 || id == 11 || id >= 25; }

Operand broadcast(int id, const Operand& x, const Operand& y, double p) {
  if (!binary(id)) {
    Operand out = x;
    for (auto& e : out.v) e = scalar_formula(id, e, 0.0, p);
    return out;
  }
  if (!x.matrix && !y.matrix) return scalar(scalar_formula(id, x.v[0], y.v[0], p));
  if (!x.matrix) {
    Operand out = y;
    for (auto& e : out.v) e = scalar_formula(id, x.v[0], e, p);
    return out;
  }
  if (!y.matrix) {
    Operand out = x;
    for (auto& e : out.v) e = scalar_formula(id, e, y.v[0], p);
    return out;
  }
  const std::size_t r = std::min(x.rows, y.rows);
  const std::size_t c = std::min(x.cols, y.cols);
  std::vector<double> v(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      v[i * c + j] = scalar_formula(id, x.v[i * x.cols + j], y.v[i * y.cols + j], p);
    }
  }
  return mat(r, c, v);
}

Operand raw(int id, const Operand& x, const Operand& y, double p) {
  if (broadcasting(id)) return broadcast(id, x, y, p);

  // Functions that handle scalar x themselves.
  switch (id) {
    case 41:
    case 42: {
      const Operand& a = id == 41 ? x : y;
      const Operand& b = id == 41 ? y : x;
      std::vector<double> v = a.v;
      v.insert(v.end(), b.v.begin(), b.v.end());
      if (v.size() > (std::size_t{1} << 17)) v.resize(std::size_t{1} << 17);
      return row(v);
    }
    case 43:
      if (!x.matrix && y.matrix) return mat(y.rows, y.cols, std::vector<double>(y.v.size(), x.v[0]));
      if (x.matrix && !y.matrix) return mat(x.rows, x.cols, std::vector<double>(x.v.size(), y.v[0]));
      return x;
    case 46:
      return x.matrix ? x : mat(1, 1, {x.v[0]});
    case 47:
      return y;
    case 48:
      return x;
    case 49:
      return scalar(p);
    default:
      break;
  }

  // Everything else requires a matrix and wires scalars through.
  if (!x.matrix) return x;
  const auto& v = x.v;
  const std::size_t n = v.size();
  switch (id) {
    case 15: {
      const double m = mean(v);
      double s = 0.0;
      for (double e : v) s += (e - m) * (e - m);
      return scalar(std::sqrt(s / static_cast<double>(n - 1)));
    }
    case 16: {
      const double m = mean(v);
      return scalar(moment(v, m, 3) / std::pow(moment(v, m, 2), 1.5));
    }
    case 17: {
      const double m = mean(v);
      const double m2 = moment(v, m, 2);
      return scalar(moment(v, m, 4) / (m2 * m2) - 3.0);
    }
    case 18:
      return scalar(mean(v));
    case 19: {
      double hi = v[0], lo = v[0];
      for (double e : v) {
        hi = std::max(hi, e);
        lo = std::min(lo, e);
      }
      return scalar(hi - lo - 1.0);
    }
    case 20:
    case 21:
    case 22: {
      Operand out = x;
      for (auto& e : out.v) e = id == 20 ? std::round(e) : id == 21 ? std::ceil(e) : std::floor(e);
      return out;
    }
    case 23:
      return scalar(*std::max_element(v.begin(), v.end()));
    case 24:
      return scalar(*std::min_element(v.begin(), v.end()));
    case 29: {
      const auto i = pick(p, n);
      return row(std::vector<double>(v.begin(), v.begin() + static_cast<long>(i) + 1));
    }
    case 30: {
      const auto i = pick(p, n);
      return row(std::vector<double>(v.begin() + static_cast<long>(i), v.end()));
    }
    case 31: {
      auto a = pick(scalar_value(y), n);
      auto b = pick(p, n);
      if (b < a) std::swap(a, b);
      return row(std::vector<double>(v.begin() + static_cast<long>(a),
                                     v.begin() + static_cast<long>(b) + 1));
    }
    case 32:
      return scalar(v[pick(scalar_value(y), n)]);
    case 33:
      return scalar(v[pick(p, n)]);
    case 34:
      return row(v);
    case 35:
      return scalar(v.front());
    case 36:
      return scalar(v.back());
    case 37:
    case 38: {
      if (n < 2) return scalar(0.0);
      std::vector<double> d;
      for (std::size_t i = 1; i < n; ++i) d.push_back(v[i] - v[i - 1]);
      return id == 37 ? row(d) : scalar(mean(d));
    }
    case 39: {
      const long len = static_cast<long>(n);
      const long k = static_cast<long>(std::floor(p * static_cast<double>(n)));
      std::vector<double> out(n);
      for (long j = 0; j < len; ++j) out[static_cast<std::size_t>(((j + k) % len + len) % len)] = v[j];
      return mat(x.rows, x.cols, out);
    }
    case 40:
      return mat(x.rows, x.cols, std::vector<double>(v.rbegin(), v.rend()));
    case 44: {
      double s = 0.0;
      for (double e : v) s += e;
      return scalar(s);
    }
    case 45: {
      std::vector<double> t(n);
      for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) t[j * x.rows + i] = v[i * x.cols + j];
      }
      return mat(x.cols, x.rows, t);
    }
    case 50:
      return mat(x.rows, x.cols, std::vector<double>(n, p));
    case 51:
      return mat(x.rows, x.cols, std::vector<double>(n, 0.0));
    case 52:
      return mat(x.rows, x.cols, std::vector<double>(n, 1.0));
    default:
      throw std::logic_error("unknown function id");
  }
}

}  // namespace

Operand apply(int id, const Operand& x, const Operand& y, double p) {
  Operand out = raw(id, x, y, p);
  for (auto& e : out.v) {
    const double w = p * e;
    e = std::isfinite(w) ? std::clamp(w, -1.0, 1.0) : 0.0;
  }
  return out;
}

}  // namespace mtcgp::reference
