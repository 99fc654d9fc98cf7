#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtcgp/functions.hpp"
#include "mtcgp/genome.hpp"
#include "mtcgp/value.hpp"

namespace mtcgp {

struct Node {
  std::size_t x = 0;
  std::size_t y = 0;
  const FunctionSpec* function = nullptr;  // null for input nodes
  double param = 0.0;                      // p_n in [-1, 1]
  bool active = false;

  bool is_input() const { return function == nullptr; }
};

// Decoded phenotype with a per-node output buffer. Evaluation is stateful:
// connections to the same or a later node read the previous step's output.
class Program {
 public:
  explicit Program(const Genome& genome);

  std::size_t n_input() const { return n_input_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const std::size_t> outputs() const { return outputs_; }
  std::span<const Value> state() const { return state_; }

  // Ascending indices of active nodes.
  const std::vector<std::size_t>& active_nodes() const { return active_; }

  // Sets the input nodes, evaluates each active program node once in index
  // order (in place) and returns the output node values.
  std::vector<Value> step(std::span<const Value> inputs);

  // All node outputs back to scalar 0.
  void reset();

 private:
  std::size_t n_input_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> outputs_;
  std::vector<std::size_t> active_;
  std::vector<Value> state_;
};

Program decode(const Genome& genome);

// Nodes reachable from the outputs through the operands each function reads.
// Visited nodes are not followed again, so recurrent cycles terminate.
std::vector<std::size_t> trace_active(std::span<const Node> nodes,
                                      std::span<const std::size_t> outputs);

// Argmax over scalar_of(outputs); ties go to the lowest index.
std::size_t select_action(std::span<const Value> outputs);

}  // namespace mtcgp
