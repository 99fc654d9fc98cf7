#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtcgp/random.hpp"

namespace mtcgp {

struct GenomeShape {
  std::size_t n_input = 3;
  std::size_t n_output = 1;
  std::size_t columns = 40;  // program nodes after the inputs
  double recurrency = 0.1;

  std::size_t node_count() const { return n_input + columns; }
  std::size_t gene_count() const { return n_output + 4 * columns; }

  friend bool operator==(const GenomeShape&, const GenomeShape&) = default;
};

// Floating point CGP genome: n_output output genes followed by four genes
// (x, y, function, parameter) per program node, every gene in [0, 1).
class Genome {
 public:
  // Throws std::invalid_argument on a malformed shape or gene vector.
  Genome(GenomeShape shape, std::vector<double> genes);

  const GenomeShape& shape() const { return shape_; }
  std::span<const double> genes() const { return genes_; }

  std::span<const double> output_genes() const {
    return std::span<const double>(genes_).first(shape_.n_output);
  }
  // Genes of program node k, k in [0, columns).
  std::span<const double> node_genes(std::size_t k) const {
    return std::span<const double>(genes_).subspan(shape_.n_output + 4 * k, 4);
  }

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  friend class GenomeEditor;
  GenomeShape shape_;
  std::vector<double> genes_;
};

// Controlled mutable access for operators that must keep genes in [0, 1).
class GenomeEditor {
 public:
  explicit GenomeEditor(Genome& g) : genome_(g) {}
  void set(std::size_t index, double gene);

 private:
  Genome& genome_;
};

void validate_shape(const GenomeShape& shape);

Genome random_genome(const GenomeShape& shape, Rng& rng);

// floor(gene * ((N - n) * r + n)): the x/y gene of node n scaled by the
// recurrency range. With r = 0 the result is < n; with r = 1 it spans [0, N).
std::size_t connection_index(double gene, std::size_t n, std::size_t node_count,
                             double recurrency);

}  // namespace mtcgp
