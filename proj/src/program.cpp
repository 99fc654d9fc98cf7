#include "mtcgp/program.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mtcgp {

Program::Program(const Genome& genome) : n_input_(genome.shape().n_input) {
  const auto& shape = genome.shape();
  const auto n_nodes = shape.node_count();

  nodes_.resize(n_nodes);
  for (std::size_t k = 0; k < shape.columns; ++k) {
    const auto n = n_input_ + k;
    const auto genes = genome.node_genes(k);
    Node& node = nodes_[n];
    node.x = connection_index(genes[0], n, n_nodes, shape.recurrency);
    node.y = connection_index(genes[1], n, n_nodes, shape.recurrency);
    node.function = &function_from_gene(genes[2]);
    node.param = 2.0 * genes[3] - 1.0;
  }

  outputs_.reserve(shape.n_output);
  for (double g : genome.output_genes()) {
    outputs_.push_back(
        static_cast<std::size_t>(std::floor(g * static_cast<double>(n_nodes))));
  }

  active_ = trace_active(nodes_, outputs_);
  for (auto i : active_) nodes_[i].active = true;
  state_.assign(n_nodes, Value{});
}

std::vector<Value> Program::step(std::span<const Value> inputs) {
  if (inputs.size() != n_input_) {
    throw std::invalid_argument("program expects " + std::to_string(n_input_) +
                                " inputs, got " + std::to_string(inputs.size()));
  }
  for (std::size_t i = 0; i < n_input_; ++i) state_[i] = inputs[i];
  for (auto n : active_) {
    if (n < n_input_) continue;
    const Node& node = nodes_[n];
    state_[n] = apply(*node.function, state_[node.x], state_[node.y], node.param);
  }
  std::vector<Value> out;
  out.reserve(outputs_.size());
  for (auto o : outputs_) out.push_back(state_[o]);
  return out;
}

void Program::reset() { state_.assign(nodes_.size(), Value{}); }

Program decode(const Genome& genome) { return Program(genome); }

std::vector<std::size_t> trace_active(std::span<const Node> nodes,
                                      std::span<const std::size_t> outputs) {
  std::vector<bool> marked(nodes.size(), false);
  std::vector<std::size_t> pending(outputs.begin(), outputs.end());
  while (!pending.empty()) {
    const auto n = pending.back();
    pending.pop_back();
    if (marked[n]) continue;
    marked[n] = true;
    const Node& node = nodes[n];
    if (node.is_input()) continue;
    if (reads_x(node.function->id)) pending.push_back(node.x);
    if (reads_y(node.function->id)) pending.push_back(node.y);
  }
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (marked[i]) active.push_back(i);
  }
  return active;
}

std::size_t select_action(std::span<const Value> outputs) {
  if (outputs.empty()) throw std::invalid_argument("select_action needs outputs");
  std::size_t best = 0;
  double best_value = scalar_of(outputs[0]);
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    const double v = scalar_of(outputs[i]);
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  return best;
}

}  // namespace mtcgp
