#pragma once

#include <cstddef>
#include <cstdint>

#include "mtcgp/environment.hpp"
#include "mtcgp/random.hpp"

namespace mtcgp {

// Small deterministic pixel game: a ball falls one row per frame and a
// three-cell paddle on the bottom row tries to catch it.
namespace catch_game {

inline constexpr int kSize = 12;
inline constexpr int kBottomRow = kSize - 1;
inline constexpr int kPaddleMin = 1;
inline constexpr int kPaddleMax = kSize - 2;
inline constexpr int kBalls = 10;
inline constexpr int kPaddleStart = 5;

enum Action : std::size_t { kNoop = 0, kLeft = 1, kRight = 2 };
inline constexpr std::size_t kActionCount = 3;

struct State {
  int ball_row = 0;
  int ball_col = 0;
  int paddle = kPaddleStart;  // centre column
  int balls_remaining = kBalls;
  double score = 0.0;

  bool done() const { return balls_remaining == 0; }
};

int spawn_column(Rng& rng);

State initial_state(Rng& rng);

// Advances one frame; returns the reward. Throws std::logic_error when the
// episode is already over.
double step(State& state, std::size_t action, Rng& rng);

Observation render(const State& state);

}  // namespace catch_game

class CatchEnvironment final : public Environment {
 public:
  std::size_t action_count() const override { return catch_game::kActionCount; }
  Observation reset(std::uint64_t seed) override;
  StepResult step(std::size_t action) override;

  const catch_game::State& state() const { return state_; }

 private:
  catch_game::State state_;
  Rng rng_;
  bool started_ = false;
};

}  // namespace mtcgp
