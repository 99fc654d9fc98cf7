#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "mtcgp/value.hpp"

namespace mtcgp {

// Canonical order: mathematical, statistical and comparison functions first,
// then list processing and miscellaneous functions.
enum class FunctionId : std::uint8_t {
  Add,
  AMinus,
  Mult,
  CMult,
  Inv,
  Abs,
  Sqrt,
  CPow,
  YPow,
  ExpX,
  SinX,
  SqrtXY,
  Acos,
  Asin,
  Atan,
  StdDev,
  Skew,
  Kurtosis,
  Mean,
  Range,
  Round,
  Ceil,
  Floor,
  Max1,
  Min1,
  Lt,
  Gt,
  Max2,
  Min2,
  SplitBefore,
  SplitAfter,
  RangeIn,
  IndexY,
  IndexP,
  Vectorize,
  First,
  Last,
  Differences,
  AvgDifferences,
  Rotate,
  Reverse,
  PushBack,
  PushFront,
  Set,
  Sum,
  Transpose,
  VecFromDouble,
  YWire,
  Nop,
  Const,
  ConstVectorD,
  Zeros,
  Ones,
};

inline constexpr std::size_t kFunctionCount = 53;

// PUSH_BACK and PUSH_FRONT keep at most this many leading elements, so a
// recurrent concatenation cannot grow without bound.
inline constexpr std::size_t kMaxConcatLength = std::size_t{1} << 17;

struct FunctionSpec {
  FunctionId id;
  std::string_view name;
  int arity;
  bool broadcasting;
};

std::span<const FunctionSpec> function_table();
const FunctionSpec& function_spec(FunctionId id);
const FunctionSpec* find_function(std::string_view name);

// floor(gene * 53), gene in [0, 1).
const FunctionSpec& function_from_gene(double gene);

// Functions that only process matrices and pass a scalar x straight through.
bool is_wire_on_scalar(FunctionId id);

// Whether evaluating the function reads the x / y operand.
bool reads_x(FunctionId id);
bool reads_y(FunctionId id);

// The unweighted function value f(x, y, p), before the p weight and
// constraining. Exposed for inspection and tests.
Value apply_raw(const FunctionSpec& spec, const Value& x, const Value& y, double p);

// constrain(p * f(x, y, p)), element-wise.
Value apply(const FunctionSpec& spec, const Value& x, const Value& y, double p);

}  // namespace mtcgp
