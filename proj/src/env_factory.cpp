#include "mtcgp/env_factory.hpp"

#include <stdexcept>

#include "mtcgp/ale_bridge.hpp"
#include "mtcgp/catch_game.hpp"

namespace mtcgp {

EnvironmentFactory make_environment_factory(const std::string& name, const RunConfig& config) {
  if (name == "catch") {
    return [] { return std::make_unique<CatchEnvironment>(); };
  }
  constexpr std::string_view prefix = "ale:";
  if (name.starts_with(prefix) && name.size() > prefix.size()) {
    ale::BridgeConfig bridge{config.ale_server, config.rom_dir, name.substr(prefix.size())};
    return [bridge] { return std::make_unique<ale::AleEnvironment>(bridge); };
  }
  throw std::invalid_argument("unknown environment '" + name + "'");
}

}  // namespace mtcgp
