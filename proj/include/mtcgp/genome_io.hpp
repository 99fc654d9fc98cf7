#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mtcgp/genome.hpp"

namespace mtcgp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

// Two lines: "CGP1 <n_input> <n_output> <C> <r>" then all genes, written with
// 17 significant digits.
std::string serialize_genome(const Genome& genome);
Genome parse_genome(std::string_view text);

void write_genome(const std::filesystem::path& path, const Genome& genome);
Genome read_genome(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mtcgp
