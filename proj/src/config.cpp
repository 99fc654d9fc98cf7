#include "mtcgp/config.hpp"

#include <charconv>
#include <set>

#include "mtcgp/genome_io.hpp"

namespace mtcgp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_value(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(text) +
                      "'");
  }
  return value;
}

std::size_t positive(std::string_view key, std::string_view text) {
  const auto v = parse_value<std::size_t>(key, text);
  if (v == 0) throw ConfigError("'" + std::string(key) + "' must be positive");
  return v;
}

double in_range(std::string_view key, std::string_view text, double lo, double hi,
                bool lo_open, bool hi_open) {
  const auto v = parse_value<double>(key, text);
  const bool ok = (lo_open ? v > lo : v >= lo) && (hi_open ? v < hi : v <= hi);
  if (!ok) throw ConfigError("'" + std::string(key) + "' out of range");
  return v;
}

}  // namespace

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
  if (key == "env") {
    if (value.empty()) throw ConfigError("'env' must not be empty");
    config.env = value;
  } else if (key == "lambda") {
    config.lambda = positive(key, value);
  } else if (key == "c") {
    config.c = positive(key, value);
  } else if (key == "r") {
    config.r = in_range(key, value, 0.0, 1.0, false, false);
  } else if (key == "m_nodes") {
    config.m_nodes = in_range(key, value, 0.0, 1.0, true, false);
  } else if (key == "m_output") {
    config.m_output = in_range(key, value, 0.0, 1.0, true, false);
  } else if (key == "n_eval") {
    config.n_eval = positive(key, value);
  } else if (key == "episodes") {
    config.episodes = positive(key, value);
  } else if (key == "p_fskip") {
    config.p_fskip = in_range(key, value, 0.0, 1.0, false, true);
  } else if (key == "frame_cap") {
    config.frame_cap = positive(key, value);
  } else if (key == "seed") {
    config.seed = parse_value<std::uint64_t>(key, value);
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else if (key == "ale_server") {
    config.ale_server = value;
  } else if (key == "rom_dir") {
    config.rom_dir = value;
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }
    try {
      set_config_value(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

std::string serialize_config(const RunConfig& c) {
  std::string out;
  auto put = [&](std::string_view key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  put("env", c.env);
  put("lambda", std::to_string(c.lambda));
  put("c", std::to_string(c.c));
  put("r", format_double(c.r));
  put("m_nodes", format_double(c.m_nodes));
  put("m_output", format_double(c.m_output));
  put("n_eval", std::to_string(c.n_eval));
  put("episodes", std::to_string(c.episodes));
  put("p_fskip", format_double(c.p_fskip));
  put("frame_cap", std::to_string(c.frame_cap));
  put("seed", std::to_string(c.seed));
  put("out_dir", c.out_dir);
  put("ale_server", c.ale_server);
  put("rom_dir", c.rom_dir);
  return out;
}

EvaluationSettings evaluation_settings(const RunConfig& config) {
  return {config.episodes, config.p_fskip, config.frame_cap};
}

EvolutionConfig evolution_config(const RunConfig& config, std::size_t n_input,
                                 std::size_t n_output) {
  EvolutionConfig ec;
  ec.shape = {n_input, n_output, config.c, config.r};
  ec.lambda = config.lambda;
  ec.n_eval = config.n_eval;
  ec.m_nodes = config.m_nodes;
  ec.m_output = config.m_output;
  ec.evaluation = evaluation_settings(config);
  ec.seed = config.seed;
  return ec;
}

}  // namespace mtcgp
