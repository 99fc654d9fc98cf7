#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <sys/types.h>
#include <vector>

#include "mtcgp/environment.hpp"

namespace mtcgp::ale {

// The full Atari controller action set; servers report legal actions as
// indices into this table.
inline constexpr std::array<std::string_view, 18> kActionNames{
    "NOOP",      "FIRE",      "UP",         "RIGHT",      "LEFT",          "DOWN",
    "UPRIGHT",   "UPLEFT",    "DOWNRIGHT",  "DOWNLEFT",   "UPFIRE",        "RIGHTFIRE",
    "LEFTFIRE",  "DOWNFIRE",  "UPRIGHTFIRE", "UPLEFTFIRE", "DOWNRIGHTFIRE", "DOWNLEFTFIRE"};

inline constexpr std::size_t kMinLegalActions = 4;

enum class BridgeErrorKind { Protocol, Server, Timeout, ProcessExit, Io };

class BridgeError : public std::runtime_error {
 public:
  BridgeError(BridgeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  BridgeErrorKind kind() const { return kind_; }

 private:
  BridgeErrorKind kind_;
};

struct Handshake {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<int> legal_actions;  // global action ids
};

struct StepHeader {
  double reward = 0.0;
  bool done = false;
};

// "OK <w> <h> <k> <a1..ak>" or "ERR <reason>".
Handshake parse_handshake(std::string_view line);
// "R <reward> <0|1>"
StepHeader parse_step_header(std::string_view line);
// Three row-major planes (red, green, blue) of width*height bytes, scaled by 1/255.
Observation decode_planes(std::span<const std::uint8_t> bytes, std::size_t width,
                          std::size_t height);

// One emulator server process speaking the line protocol on stdin/stdout.
class Session {
 public:
  Session(const std::string& server, const std::vector<std::string>& args,
          std::chrono::milliseconds timeout = std::chrono::seconds(10));
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const Handshake& handshake(std::string_view rom);
  StepResult step(std::size_t local_action);

  const std::optional<Handshake>& info() const { return info_; }
  std::size_t frames() const { return frames_; }

 private:
  void send(const std::string& message);
  std::string read_line();
  std::vector<std::uint8_t> read_exact(std::size_t n);
  void fill_buffer();

  int fd_ = -1;
  pid_t pid_ = -1;
  std::chrono::milliseconds timeout_;
  std::string buffer_;
  std::optional<Handshake> info_;
  bool done_ = false;
  std::size_t frames_ = 0;
};

struct BridgeConfig {
  std::string server;   // executable path (config key ale_server)
  std::string rom_dir;  // passed to the server as its only argument
  std::string rom;
  std::chrono::milliseconds timeout = std::chrono::seconds(10);
};

// Environment over a bridge session. Every reset starts a fresh server
// process; the first observation of an episode is a blank screen.
class AleEnvironment final : public Environment {
 public:
  explicit AleEnvironment(BridgeConfig config);

  std::size_t action_count() const override { return handshake_.legal_actions.size(); }
  Observation reset(std::uint64_t seed) override;
  StepResult step(std::size_t action) override;

  const Handshake& handshake() const { return handshake_; }

 private:
  std::unique_ptr<Session> open();

  BridgeConfig config_;
  Handshake handshake_;
  std::unique_ptr<Session> session_;
};

}  // namespace mtcgp::ale
