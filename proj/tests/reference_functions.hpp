#pragma once

// Independent per-function reference for the node function set, written
// directly from the function definitions without sharing code with the library.

#include <cstddef>
#include <vector>

#include "mtcgp/value.hpp"

namespace mtcgp::reference {

struct Operand {
  bool matrix = false;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<double> v{0.0};
};

Operand from_value(const Value& value);
Value to_value(const Operand& op);

// Reference of constrain(p * f(x, y, p)) for function id 0..52.
Operand apply(int id, const Operand& x, const Operand& y, double p);

}  // namespace mtcgp::reference
