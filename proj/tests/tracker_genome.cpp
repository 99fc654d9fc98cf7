#include "tracker_genome.hpp"

#include <cmath>
#include <stdexcept>

namespace mtcgp::testing {

Genome build_genome(std::size_t n_input, const std::vector<NodeSpec>& nodes,
                    const std::vector<std::size_t>& outputs, double recurrency) {
  const GenomeShape shape{n_input, outputs.size(), nodes.size(), recurrency};
  const auto n_nodes = static_cast<double>(shape.node_count());
  std::vector<double> genes;
  for (auto o : outputs) genes.push_back((static_cast<double>(o) + 0.5) / n_nodes);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto n = n_input + k;
    const double range = static_cast<double>(shape.node_count() - n) * recurrency +
                         static_cast<double>(n);
    const auto& spec = nodes[k];
    genes.push_back((static_cast<double>(spec.x) + 0.5) / range);
    genes.push_back((static_cast<double>(spec.y) + 0.5) / range);
    genes.push_back((static_cast<double>(spec.function) + 0.5) / kFunctionCount);
    genes.push_back((spec.param + 1.0) / 2.0);
  }
  Genome genome(shape, std::move(genes));

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const auto n = n_input + k;
    const auto g = genome.node_genes(k);
    if (connection_index(g[0], n, shape.node_count(), recurrency) != nodes[k].x ||
        connection_index(g[1], n, shape.node_count(), recurrency) != nodes[k].y ||
        function_from_gene(g[2]).id != nodes[k].function) {
      throw std::logic_error("build_genome: node does not decode as requested");
    }
  }
  return genome;
}

namespace {

// Close to 1 and exact through the gene encoding, so +kUnit and -kUnit cancel.
constexpr double kUnit = 1.0 - 0x1p-10;

// Parameter selecting split index i of a length-144 vector, centred in its bucket.
double split_param(std::size_t i) {
  const double u = (static_cast<double>(i) + 0.5) / 144.0;
  return 2.0 * u - 1.0;
}

}  // namespace

Genome tracker_genome() {
  using F = FunctionId;
  constexpr std::size_t kRed = 0, kGreen = 1;
  std::vector<NodeSpec> nodes;
  auto add = [&](F f, std::size_t x, std::size_t y, double p) {
    nodes.push_back({f, x, y, p});
    return 3 + nodes.size() - 1;
  };

  // Column-major flattening: flat index = 12 * column + row.
  const auto ball = add(F::Vectorize, add(F::Transpose, kRed, 0, kUnit), 0, kUnit);
  const auto paddle = add(F::Vectorize, add(F::Transpose, kGreen, 0, kUnit), 0, kUnit);

  // Indicator that `vec` has mass in the slice, scaled by +/-|p| so the sign
  // is fixed: MAX1 when the slice weight is positive, MIN1 when negative.
  auto indicator = [&](F split, std::size_t vec, double p, double sign) {
    const auto slice = add(split, vec, 0, p);
    return add(p > 0 ? F::Max1 : F::Min1, slice, 0, sign * (p > 0 ? kUnit : -kUnit));
  };

  // Left: some prefix of columns 0..k holds the ball but no paddle cell.
  std::vector<std::size_t> left_terms;
  for (std::size_t k = 0; k <= 10; ++k) {
    const double p = split_param(12 * k + 11);
    const auto b = indicator(F::SplitBefore, ball, p, 1.0);
    const auto g = indicator(F::SplitBefore, paddle, p, -1.0);
    left_terms.push_back(add(F::Add, b, g, kUnit));
  }
  // Right: some suffix of columns k..11 holds the ball but no paddle cell.
  std::vector<std::size_t> right_terms;
  for (std::size_t k = 1; k <= 11; ++k) {
    const double p = split_param(12 * k);
    const auto b = indicator(F::SplitAfter, ball, p, 1.0);
    const auto g = indicator(F::SplitAfter, paddle, p, -1.0);
    right_terms.push_back(add(F::Add, b, g, kUnit));
  }
  auto max_of = [&](const std::vector<std::size_t>& terms) {
    auto acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = add(F::Max2, acc, terms[i], kUnit);
    return acc;
  };
  const auto left = max_of(left_terms);
  const auto right = max_of(right_terms);
  const auto stay = add(F::Const, 0, 0, 0.0);

  return build_genome(3, nodes, {stay, left, right});
}

std::size_t tracker_policy(const catch_game::State& s) {
  if (s.ball_col <= s.paddle - 2) return catch_game::kLeft;
  if (s.ball_col >= s.paddle + 2) return catch_game::kRight;
  return catch_game::kNoop;
}

}  // namespace mtcgp::testing
