// Command-line front end: evolve, replay and export-dot.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "mtcgp/ale_bridge.hpp"
#include "mtcgp/config.hpp"
#include "mtcgp/dot_export.hpp"
#include "mtcgp/env_factory.hpp"
#include "mtcgp/evolution.hpp"
#include "mtcgp/genome_io.hpp"

namespace fs = std::filesystem;
using namespace mtcgp;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitEnvironment = 3;
constexpr int kExitGenome = 4;

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string env;
  std::string out;
  std::size_t threads = 0;
  std::string genome_path;
  bool trace = false;
  bool used_only = false;
};

// Loads the config file (if any) and applies command-line overrides.
RunConfig load_config(const Options& opt) {
  RunConfig config;
  if (!opt.config_path.empty()) config = parse_config(read_text_file(opt.config_path));
  if (opt.seed) config.seed = *opt.seed;
  if (!opt.env.empty()) config.env = opt.env;
  if (!opt.out.empty()) config.out_dir = opt.out;
  return config;
}

std::string log_line(const GenerationRecord& r) {
  return "generation " + std::to_string(r.generation) + " evals " +
         std::to_string(r.evaluations) + " best " + format_double(r.best) + "\n";
}

int cmd_evolve(const Options& opt) {
  RunConfig config;
  try {
    if (opt.config_path.empty()) throw ConfigError("--config is required");
    config = load_config(opt);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const auto factory = make_environment_factory(config.env, config);
    const auto n_output = factory()->action_count();
    auto ec = evolution_config(config, kObservationPlanes, n_output);
    ec.workers = opt.threads != 0 ? opt.threads
                                  : std::max(1u, std::thread::hardware_concurrency());

    fs::create_directories(config.out_dir);
    const fs::path out_dir(config.out_dir);
    std::string log;
    const auto state = run_evolution(ec, factory, [&](const GenerationRecord& r) {
      log += log_line(r);
    });

    write_genome(out_dir / "best.cgp", state.elite);
    write_text_file(out_dir / "log.txt", log);
    write_text_file(out_dir / "run.cfg", serialize_config(config));
    const std::string summary = "best " + format_double(state.elite_fitness) + " evals " +
                                std::to_string(state.evaluations_used) + "\n" +
                                "replay-seed " + std::to_string(state.elite_eval_seed) + "\n";
    write_text_file(out_dir / "summary.txt", summary);
    std::cout << summary;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "environment error: " << e.what() << "\n";
    return kExitEnvironment;
  }
}

std::optional<Genome> load_genome(const std::string& path) {
  try {
    return read_genome(path);
  } catch (const std::exception& e) {
    std::cerr << "genome error: " << e.what() << "\n";
    return std::nullopt;
  }
}

std::string trace_line(const Program& program, std::size_t n) {
  const auto& node = program.nodes()[n];
  const auto& value = program.state()[n];
  std::string label = node.is_input() ? "in" + std::to_string(n)
                                      : std::string(node.function->name);
  std::string shape = value.is_scalar()
                          ? std::string("scalar")
                          : std::to_string(value.rows()) + "x" + std::to_string(value.cols());
  return "node " + std::to_string(n) + " " + label + " " + shape + " " +
         format_double(scalar_of(value)) + "\n";
}

int cmd_replay(const Options& opt) {
  RunConfig config;
  try {
    config = load_config(opt);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  auto genome = load_genome(opt.genome_path);
  if (!genome) return kExitGenome;

  std::unique_ptr<Environment> env;
  try {
    env = make_environment_factory(config.env, config)();
  } catch (const std::exception& e) {
    std::cerr << "environment error: " << e.what() << "\n";
    return kExitEnvironment;
  }
  if (env->action_count() != genome->shape().n_output ||
      genome->shape().n_input != kObservationPlanes) {
    std::cerr << "genome error: genome has " << genome->shape().n_output
              << " outputs, environment has " << env->action_count() << " actions\n";
    return kExitGenome;
  }

  Program program(*genome);
  std::string out;
  try {
    const auto result = play_episode(
        program, *env, evaluation_settings(config), episode_seed(config.seed, 0),
        [&](const FrameRecord& f, const Program& p) {
          out += "frame " + std::to_string(f.frame) + " action " + std::to_string(f.action) +
                 " reward " + format_double(f.reward) + "\n";
          if (opt.trace) {
            for (auto n : p.active_nodes()) out += trace_line(p, n);
          }
        });
    out += "total " + format_double(result.total_reward) + "\n";
  } catch (const std::exception& e) {
    std::cout << out;
    std::cerr << "environment error: " << e.what() << "\n";
    return kExitEnvironment;
  }
  std::cout << out;
  return 0;
}

int cmd_export_dot(const Options& opt) {
  auto genome = load_genome(opt.genome_path);
  if (!genome) return kExitGenome;
  Program program(*genome);

  std::optional<std::set<std::size_t>> used;
  if (opt.used_only) {
    RunConfig config;
    try {
      config = load_config(opt);
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kExitConfig;
    }
    try {
      auto env = make_environment_factory(config.env, config)();
      if (env->action_count() != genome->shape().n_output) {
        std::cerr << "genome error: output count does not match environment\n";
        return kExitGenome;
      }
      used.emplace();
      Program player(*genome);
      play_episode(player, *env, evaluation_settings(config), episode_seed(config.seed, 0),
                   [&](const FrameRecord& f, const Program&) { used->insert(f.action); });
    } catch (const std::exception& e) {
      std::cerr << "environment error: " << e.what() << "\n";
      return kExitEnvironment;
    }
  }
  std::cout << export_dot(program, used);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-type Cartesian genetic programming for pixel games"};
  app.require_subcommand(1);
  Options opt;

  auto* evolve = app.add_subcommand("evolve", "Run 1+lambda evolution");
  evolve->add_option("--config", opt.config_path, "Run configuration file");
  evolve->add_option("--seed", opt.seed, "Override the run seed");
  evolve->add_option("--env", opt.env, "Environment: catch or ale:<rom>");
  evolve->add_option("--out", opt.out, "Output directory");
  evolve->add_option("--threads", opt.threads, "Evaluation workers (default: all cores)");

  auto* replay = app.add_subcommand("replay", "Play one episode with a genome");
  replay->add_option("genome", opt.genome_path, "Genome file")->required();
  replay->add_option("--config", opt.config_path, "Run configuration file");
  replay->add_option("--env", opt.env, "Environment: catch or ale:<rom>");
  replay->add_option("--seed", opt.seed, "Evaluation seed (see replay-seed in summary.txt)");
  replay->add_flag("--trace", opt.trace, "Print every active node's output per frame");

  auto* dot = app.add_subcommand("export-dot", "Write the active graph as Graphviz DOT");
  dot->add_option("genome", opt.genome_path, "Genome file")->required();
  dot->add_flag("--used-only", opt.used_only,
                "Drop outputs never chosen during one replayed episode");
  dot->add_option("--config", opt.config_path, "Run configuration file (with --used-only)");
  dot->add_option("--env", opt.env, "Environment (with --used-only)");
  dot->add_option("--seed", opt.seed, "Evaluation seed (with --used-only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (evolve->parsed()) return cmd_evolve(opt);
  if (replay->parsed()) return cmd_replay(opt);
  return cmd_export_dot(opt);
}
