#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "mtcgp/random.hpp"
#include "mtcgp/value.hpp"

namespace mtcgp {

// Red, green and blue planes with elements in [0, 1], identical dimensions.
struct Observation {
  Value red;
  Value green;
  Value blue;

  std::array<Value, 3> planes() const { return {red, green, blue}; }
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
};

// Episodic game presenting only its legal action subset.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::size_t action_count() const = 0;
  virtual Observation reset(std::uint64_t seed) = 0;
  // Precondition: action < action_count() and the episode is not done.
  virtual StepResult step(std::size_t action) = 0;
};

inline constexpr std::size_t kDefaultFrameCap = 18000;
inline constexpr double kDefaultFrameSkip = 0.25;

// Stochastic frame skipping: with probability p a frame replays the previous
// action without consulting the policy. The history starts at action 0.
class FrameSkip {
 public:
  struct Outcome {
    StepResult result;
    std::size_t action = 0;
    bool skipped = false;
  };

  FrameSkip(double probability, std::uint64_t seed);

  Outcome step(Environment& env, const std::function<std::size_t()>& policy);

  std::size_t previous_action() const { return previous_; }

 private:
  double probability_;
  Rng rng_;
  std::size_t previous_ = 0;
};

}  // namespace mtcgp
