#include "mtcgp/environment.hpp"

#include <stdexcept>

namespace mtcgp {

FrameSkip::FrameSkip(double probability, std::uint64_t seed)
    : probability_(probability), rng_(seed) {
  if (!(probability >= 0.0 && probability < 1.0)) {
    throw std::invalid_argument("frame skip probability must lie in [0, 1)");
  }
}

FrameSkip::Outcome FrameSkip::step(Environment& env,
                                   const std::function<std::size_t()>& policy) {
  Outcome out;
  // Always draw, so the skip sequence does not depend on the policy.
  out.skipped = unit_uniform(rng_) < probability_;
  if (!out.skipped) previous_ = policy();
  out.action = previous_;
  out.result = env.step(previous_);
  return out;
}

}  // namespace mtcgp
