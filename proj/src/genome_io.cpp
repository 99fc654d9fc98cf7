#include "mtcgp/genome_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mtcgp {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

namespace {

std::string format_exact(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string serialize_genome(const Genome& genome) {
  const auto& s = genome.shape();
  std::string out = "CGP1 " + std::to_string(s.n_input) + " " + std::to_string(s.n_output) +
                    " " + std::to_string(s.columns) + " " + format_exact(s.recurrency) + "\n";
  bool first = true;
  for (double g : genome.genes()) {
    if (!first) out += ' ';
    out += format_exact(g);
    first = false;
  }
  out += '\n';
  return out;
}

namespace {

class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool next(std::string_view& token) {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ >= text_.size()) return false;
    const auto start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    token = text_.substr(start, pos_ - start);
    return true;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class T>
T number(std::string_view token, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Genome parse_genome(std::string_view text) {
  const auto newline = text.find('\n');
  if (newline == std::string_view::npos) throw ParseError("genome file has no header line");

  Tokens header(text.substr(0, newline));
  std::string_view tok;
  if (!header.next(tok) || tok != "CGP1") throw ParseError("missing CGP1 magic");
  GenomeShape shape;
  const char* fields[] = {"n_input", "n_output", "columns"};
  std::size_t* targets[] = {&shape.n_input, &shape.n_output, &shape.columns};
  for (int i = 0; i < 3; ++i) {
    if (!header.next(tok)) throw ParseError(std::string("header missing ") + fields[i]);
    *targets[i] = number<std::size_t>(tok, fields[i]);
  }
  if (!header.next(tok)) throw ParseError("header missing recurrency");
  shape.recurrency = number<double>(tok, "recurrency");
  if (header.next(tok)) throw ParseError("trailing header fields");

  std::vector<double> genes;
  Tokens body(text.substr(newline + 1));
  while (body.next(tok)) genes.push_back(number<double>(tok, "gene"));
  try {
    return Genome(shape, std::move(genes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_genome(const std::filesystem::path& path, const Genome& genome) {
  write_text_file(path, serialize_genome(genome));
}

Genome read_genome(const std::filesystem::path& path) {
  return parse_genome(read_text_file(path));
}

}  // namespace mtcgp
