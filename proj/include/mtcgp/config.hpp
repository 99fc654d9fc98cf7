#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mtcgp/evolution.hpp"

namespace mtcgp {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat "key = value" run configuration. Defaults are the standard CGP
// settings for Atari play.
struct RunConfig {
  std::string env = "catch";
  std::size_t lambda = 9;
  std::size_t c = 40;
  double r = 0.1;
  double m_nodes = 0.1;
  double m_output = 0.6;
  std::size_t n_eval = 10000;
  std::size_t episodes = 1;
  double p_fskip = kDefaultFrameSkip;
  std::size_t frame_cap = kDefaultFrameCap;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string ale_server;
  std::string rom_dir;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Sets one key; throws ConfigError for unknown keys or invalid values.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

// Blank lines and '#' comments are ignored; repeated keys are rejected.
RunConfig parse_config(std::string_view text);
std::string serialize_config(const RunConfig& config);

EvaluationSettings evaluation_settings(const RunConfig& config);
EvolutionConfig evolution_config(const RunConfig& config, std::size_t n_input,
                                 std::size_t n_output);

}  // namespace mtcgp
