#pragma once

#include <string>

#include "mtcgp/config.hpp"
#include "mtcgp/evolution.hpp"

namespace mtcgp {

// Number of program inputs every environment feeds (red, green, blue planes).
inline constexpr std::size_t kObservationPlanes = 3;

// Resolves an environment name: "catch" or "ale:<rom>". The ALE variant uses
// the config's ale_server and rom_dir. Throws std::invalid_argument for
// unknown names.
EnvironmentFactory make_environment_factory(const std::string& name, const RunConfig& config);

}  // namespace mtcgp
