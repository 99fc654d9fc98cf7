#include "mtcgp/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mtcgp {

std::uint64_t episode_seed(std::uint64_t eval_seed, std::size_t episode) {
  return derive_seed(eval_seed, {episode});
}

EpisodeResult play_episode(Program& program, Environment& env,
                           const EvaluationSettings& settings, std::uint64_t seed,
                           const FrameObserver& observer) {
  program.reset();
  Observation obs = env.reset(seed);
  FrameSkip skip(settings.p_fskip, derive_seed(seed, {1}));

  const auto policy = [&]() {
    const auto planes = obs.planes();
    return select_action(program.step(planes));
  };

  EpisodeResult result;
  while (result.counted_frames < settings.frame_cap) {
    auto outcome = skip.step(env, policy);
    if (!outcome.skipped) ++result.counted_frames;
    result.total_reward += outcome.result.reward;
    if (observer) {
      observer({result.frames, outcome.action, outcome.result.reward, outcome.skipped},
               program);
    }
    ++result.frames;
    obs = std::move(outcome.result.observation);
    if (outcome.result.done) break;
  }
  return result;
}

double evaluate(const Genome& genome, Environment& env, const EvaluationSettings& settings,
                std::uint64_t eval_seed) {
  if (env.action_count() != genome.shape().n_output) {
    throw std::invalid_argument("environment has " + std::to_string(env.action_count()) +
                                " actions but genome has " +
                                std::to_string(genome.shape().n_output) + " outputs");
  }
  if (settings.episodes == 0) throw std::invalid_argument("episodes must be positive");
  Program program(genome);
  double total = 0.0;
  for (std::size_t e = 0; e < settings.episodes; ++e) {
    total += play_episode(program, env, settings, episode_seed(eval_seed, e)).total_reward;
  }
  return total / static_cast<double>(settings.episodes);
}

std::size_t mutation_count(double fraction, std::size_t count) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(count) + 0.5));
}

namespace {

// Redraws k distinct positions in [offset, offset + span).
void redraw(GenomeEditor& editor, const Genome& parent, std::size_t offset, std::size_t span,
            std::size_t k, Rng& rng) {
  std::vector<std::size_t> positions(span);
  std::iota(positions.begin(), positions.end(), offset);
  k = std::min(k, span);
  // Partial Fisher-Yates: the first k entries become the chosen positions.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, span - 1);
    std::swap(positions[i], positions[pick(rng)]);
    const auto pos = positions[i];
    double gene = unit_uniform(rng);
    while (gene == parent.genes()[pos]) gene = unit_uniform(rng);
    editor.set(pos, gene);
  }
}

}  // namespace

Genome mutate(const Genome& parent, double m_nodes, double m_output, Rng& rng) {
  const auto& shape = parent.shape();
  Genome child = parent;
  GenomeEditor editor(child);
  const auto node_genes = 4 * shape.columns;
  redraw(editor, parent, shape.n_output, node_genes, mutation_count(m_nodes, node_genes), rng);
  redraw(editor, parent, 0, shape.n_output, mutation_count(m_output, shape.n_output), rng);
  return child;
}

std::size_t generation_count(std::size_t n_eval, std::size_t lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda must be positive");
  return (n_eval + lambda - 1) / lambda;
}

std::uint64_t offspring_eval_seed(std::uint64_t run_seed, std::size_t generation,
                                  std::size_t offspring) {
  return derive_seed(run_seed, {generation, offspring});
}

namespace {

// Evaluates every genome with its pre-assigned seed; results land at the
// genome's index regardless of which worker ran it.
std::vector<double> evaluate_batch(const std::vector<Genome>& genomes,
                                   const std::vector<std::uint64_t>& seeds,
                                   const EvolutionConfig& config,
                                   std::vector<std::unique_ptr<Environment>>& envs) {
  std::vector<double> fitness(genomes.size());
  const auto workers = std::min(envs.size(), genomes.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < genomes.size(); ++i) {
      fitness[i] = evaluate(genomes[i], *envs[0], config.evaluation, seeds[i]);
    }
    return fitness;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (auto i = next++; i < genomes.size(); i = next++) {
            fitness[i] = evaluate(genomes[i], *envs[w], config.evaluation, seeds[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return fitness;
}

}  // namespace

EvolutionState run_evolution(const EvolutionConfig& config, const EnvironmentFactory& factory,
                             const GenerationCallback& on_generation) {
  validate_shape(config.shape);
  if (config.lambda == 0) throw std::invalid_argument("lambda must be positive");

  std::vector<std::unique_ptr<Environment>> envs;
  for (std::size_t w = 0; w < std::max<std::size_t>(1, config.workers); ++w) {
    envs.push_back(factory());
  }

  Rng rng(config.seed);
  const auto first_seed = offspring_eval_seed(config.seed, 0, 0);
  Genome first = random_genome(config.shape, rng);
  const double first_fitness = evaluate(first, *envs[0], config.evaluation, first_seed);

  EvolutionState state{std::move(first), first_fitness, first_seed, 1, 0, {}};
  state.log.push_back({0, state.evaluations_used, state.elite_fitness});
  if (on_generation) on_generation(state.log.back());

  const auto generations = generation_count(config.n_eval, config.lambda);
  std::vector<Genome> offspring;
  std::vector<std::uint64_t> seeds;
  for (std::size_t g = 1; g <= generations; ++g) {
    offspring.clear();
    seeds.clear();
    for (std::size_t i = 0; i < config.lambda; ++i) {
      offspring.push_back(mutate(state.elite, config.m_nodes, config.m_output, rng));
      seeds.push_back(offspring_eval_seed(config.seed, g, i));
    }
    const auto fitness = evaluate_batch(offspring, seeds, config, envs);
    state.evaluations_used += offspring.size();

    // Highest fitness, lowest index among ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
      if (fitness[i] > fitness[best]) best = i;
    }
    if (fitness[best] >= state.elite_fitness) {
      state.elite = std::move(offspring[best]);
      state.elite_fitness = fitness[best];
      state.elite_eval_seed = seeds[best];
    }
    state.generation = g;
    state.log.push_back({g, state.evaluations_used, state.elite_fitness});
    if (on_generation) on_generation(state.log.back());
  }
  return state;
}

}  // namespace mtcgp
