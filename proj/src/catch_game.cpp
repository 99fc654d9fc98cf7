#include "mtcgp/catch_game.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace mtcgp {
namespace catch_game {

int spawn_column(Rng& rng) { return static_cast<int>(unit_uniform(rng) * kSize); }

State initial_state(Rng& rng) {
  State s;
  s.ball_col = spawn_column(rng);
  return s;
}

double step(State& state, std::size_t action, Rng& rng) {
  if (state.done()) throw std::logic_error("catch: step after episode end");
  if (action >= kActionCount) throw std::out_of_range("catch: invalid action");

  if (action == kLeft) state.paddle = std::max(kPaddleMin, state.paddle - 1);
  if (action == kRight) state.paddle = std::min(kPaddleMax, state.paddle + 1);
  ++state.ball_row;

  if (state.ball_row < kBottomRow) return 0.0;

  const double reward = std::abs(state.ball_col - state.paddle) <= 1 ? 1.0 : -1.0;
  state.score += reward;
  --state.balls_remaining;
  state.ball_row = 0;
  state.ball_col = spawn_column(rng);
  return reward;
}

Observation render(const State& state) {
  std::vector<double> red(kSize * kSize, 0.0);
  std::vector<double> green(kSize * kSize, 0.0);
  red[static_cast<std::size_t>(state.ball_row * kSize + state.ball_col)] = 1.0;
  for (int c = state.paddle - 1; c <= state.paddle + 1; ++c) {
    green[static_cast<std::size_t>(kBottomRow * kSize + c)] = 1.0;
  }
  return {Value::matrix(kSize, kSize, std::move(red)),
          Value::matrix(kSize, kSize, std::move(green)), Value::filled(kSize, kSize, 0.0)};
}

}  // namespace catch_game

Observation CatchEnvironment::reset(std::uint64_t seed) {
  rng_.seed(seed);
  state_ = catch_game::initial_state(rng_);
  started_ = true;
  return catch_game::render(state_);
}

StepResult CatchEnvironment::step(std::size_t action) {
  if (!started_) throw std::logic_error("catch: step before reset");
  StepResult out;
  out.reward = catch_game::step(state_, action, rng_);
  out.done = state_.done();
  out.observation = catch_game::render(state_);
  return out;
}

}  // namespace mtcgp
