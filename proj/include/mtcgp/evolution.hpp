#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "mtcgp/environment.hpp"
#include "mtcgp/genome.hpp"
#include "mtcgp/program.hpp"
#include "mtcgp/random.hpp"

namespace mtcgp {

struct EvaluationSettings {
  std::size_t episodes = 1;
  double p_fskip = kDefaultFrameSkip;
  std::size_t frame_cap = kDefaultFrameCap;  // counted (non-skipped) frames
};

struct FrameRecord {
  std::size_t frame = 0;  // emulator frame index within the episode
  std::size_t action = 0;
  double reward = 0.0;
  bool skipped = false;
};

struct EpisodeResult {
  double total_reward = 0.0;
  std::size_t frames = 0;          // emulator frames, skipped included
  std::size_t counted_frames = 0;  // frames where the program chose the action
};

// Called after every emulator frame. The program is passed so callers can
// inspect node outputs; it was only stepped when the frame was not skipped.
using FrameObserver = std::function<void(const FrameRecord&, const Program&)>;

// Resets program state and plays one episode through the frame-skip wrapper
// until the game ends or frame_cap counted frames were played.
EpisodeResult play_episode(Program& program, Environment& env,
                           const EvaluationSettings& settings, std::uint64_t episode_seed,
                           const FrameObserver& observer = {});

std::uint64_t episode_seed(std::uint64_t eval_seed, std::size_t episode);

// Mean total reward over settings.episodes episodes. Throws
// std::invalid_argument if the environment's action count differs from
// n_output.
double evaluate(const Genome& genome, Environment& env, const EvaluationSettings& settings,
                std::uint64_t eval_seed);

// round-half-up(fraction * count)
std::size_t mutation_count(double fraction, std::size_t count);

// Replaces exactly mutation_count(m_nodes, 4C) distinct node genes and
// mutation_count(m_output, n_output) distinct output genes with fresh draws.
Genome mutate(const Genome& parent, double m_nodes, double m_output, Rng& rng);

struct EvolutionConfig {
  GenomeShape shape{3, 3, 40, 0.1};
  std::size_t lambda = 9;
  std::size_t n_eval = 10000;
  double m_nodes = 0.1;
  double m_output = 0.6;
  EvaluationSettings evaluation;
  std::uint64_t seed = 0;
  std::size_t workers = 1;  // offspring evaluated concurrently
};

struct GenerationRecord {
  std::size_t generation = 0;
  std::size_t evaluations = 0;
  double best = 0.0;

  friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct EvolutionState {
  Genome elite;
  double elite_fitness = 0.0;
  std::uint64_t elite_eval_seed = 0;  // seed under which elite_fitness was measured
  std::size_t evaluations_used = 0;
  std::size_t generation = 0;
  std::vector<GenerationRecord> log;
};

using EnvironmentFactory = std::function<std::unique_ptr<Environment>()>;
using GenerationCallback = std::function<void(const GenerationRecord&)>;

std::size_t generation_count(std::size_t n_eval, std::size_t lambda);

std::uint64_t offspring_eval_seed(std::uint64_t run_seed, std::size_t generation,
                                  std::size_t offspring);

// 1 + lambda evolution: an offspring with fitness >= the elite's replaces it.
// Runs ceil(n_eval / lambda) generations after the initial elite.
EvolutionState run_evolution(const EvolutionConfig& config, const EnvironmentFactory& factory,
                             const GenerationCallback& on_generation = {});

}  // namespace mtcgp
