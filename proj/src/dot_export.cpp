#include "mtcgp/dot_export.hpp"

#include <cstdio>
#include <vector>

namespace mtcgp {

namespace {

std::string node_id(std::size_t n) { return "n" + std::to_string(n); }

std::string param_label(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", p);
  return buf;
}

}  // namespace

std::string export_dot(const Program& program,
                       const std::optional<std::set<std::size_t>>& shown_outputs) {
  const auto nodes = program.nodes();
  std::vector<std::size_t> output_slots;
  std::vector<std::size_t> output_nodes;
  for (std::size_t i = 0; i < program.outputs().size(); ++i) {
    if (shown_outputs && !shown_outputs->contains(i)) continue;
    output_slots.push_back(i);
    output_nodes.push_back(program.outputs()[i]);
  }
  const auto active = trace_active(nodes, output_nodes);

  std::string out = "digraph program {\n  rankdir=LR;\n";
  for (auto n : active) {
    const Node& node = nodes[n];
    if (node.is_input()) {
      out += "  " + node_id(n) + " [shape=box, label=\"in" + std::to_string(n) + "\"];\n";
    } else {
      out += "  " + node_id(n) + " [shape=ellipse, label=\"" + std::to_string(n) + ":" +
             std::string(node.function->name) + " p=" + param_label(node.param) + "\"];\n";
    }
  }
  for (auto slot : output_slots) {
    out += "  out" + std::to_string(slot) + " [shape=doubleoctagon, label=\"action " +
           std::to_string(slot) + "\"];\n";
  }
  for (auto n : active) {
    const Node& node = nodes[n];
    if (node.is_input()) continue;
    if (reads_x(node.function->id)) {
      out += "  " + node_id(node.x) + " -> " + node_id(n) + ";\n";
    }
    if (reads_y(node.function->id)) {
      out += "  " + node_id(node.y) + " -> " + node_id(n) + " [style=dashed];\n";
    }
  }
  for (std::size_t i = 0; i < output_slots.size(); ++i) {
    out += "  " + node_id(output_nodes[i]) + " -> out" + std::to_string(output_slots[i]) +
           ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mtcgp
