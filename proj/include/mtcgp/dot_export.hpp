#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "mtcgp/program.hpp"

namespace mtcgp {

// Graphviz DOT of the active graph. Inputs are boxes "in<i>", program nodes
// "<index>:<NAME> p=<p_n>", outputs carry their action index. x edges are
// solid, y edges dashed. When `shown_outputs` is given, only those outputs
// and the subgraph feeding them are drawn.
std::string export_dot(const Program& program,
                       const std::optional<std::set<std::size_t>>& shown_outputs = std::nullopt);

}  // namespace mtcgp
