#include "mtcgp/genome.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mtcgp {

void validate_shape(const GenomeShape& shape) {
  if (shape.n_input == 0 || shape.n_output == 0 || shape.columns == 0) {
    throw std::invalid_argument("genome shape needs positive n_input, n_output and columns");
  }
  if (!(shape.recurrency >= 0.0 && shape.recurrency <= 1.0)) {
    throw std::invalid_argument("recurrency must lie in [0, 1]");
  }
}

namespace {

bool valid_gene(double g) { return g >= 0.0 && g < 1.0; }

}  // namespace

Genome::Genome(GenomeShape shape, std::vector<double> genes)
    : shape_(shape), genes_(std::move(genes)) {
  validate_shape(shape_);
  if (genes_.size() != shape_.gene_count()) {
    throw std::invalid_argument("genome has " + std::to_string(genes_.size()) +
                                " genes, expected " + std::to_string(shape_.gene_count()));
  }
  for (double g : genes_) {
    if (!valid_gene(g)) throw std::invalid_argument("gene outside [0, 1)");
  }
}

void GenomeEditor::set(std::size_t index, double gene) {
  if (!valid_gene(gene)) throw std::invalid_argument("gene outside [0, 1)");
  genome_.genes_.at(index) = gene;
}

Genome random_genome(const GenomeShape& shape, Rng& rng) {
  validate_shape(shape);
  std::vector<double> genes(shape.gene_count());
  for (double& g : genes) g = unit_uniform(rng);
  return Genome(shape, std::move(genes));
}

std::size_t connection_index(double gene, std::size_t n, std::size_t node_count,
                             double recurrency) {
  const double range =
      static_cast<double>(node_count - n) * recurrency + static_cast<double>(n);
  return static_cast<std::size_t>(std::floor(gene * range));
}

}  // namespace mtcgp
