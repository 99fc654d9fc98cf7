#include "mtcgp/ale_bridge.hpp"

#include <cerrno>
#include <charconv>
#include <csignal>
#include <cstring>
#include <poll.h>
#include <sstream>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

namespace mtcgp::ale {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    auto j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_number(std::string_view field, std::string_view what) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw BridgeError(BridgeErrorKind::Protocol,
                      "malformed " + std::string(what) + ": '" + std::string(field) + "'");
  }
  return value;
}

[[noreturn]] void protocol_error(const std::string& what) {
  throw BridgeError(BridgeErrorKind::Protocol, what);
}

}  // namespace

Handshake parse_handshake(std::string_view line) {
  const auto fields = split_fields(line);
  if (fields.empty()) protocol_error("empty handshake reply");
  if (fields[0] == "ERR") {
    std::string reason = fields.size() > 1 ? std::string(fields[1]) : "unspecified";
    throw BridgeError(BridgeErrorKind::Server, "server refused INIT: " + reason);
  }
  if (fields[0] != "OK" || fields.size() < 4) {
    protocol_error("malformed handshake reply: '" + std::string(line) + "'");
  }
  Handshake hs;
  hs.width = parse_number<std::size_t>(fields[1], "width");
  hs.height = parse_number<std::size_t>(fields[2], "height");
  const auto k = parse_number<std::size_t>(fields[3], "action count");
  if (hs.width == 0 || hs.height == 0) protocol_error("zero screen dimension");
  if (k < kMinLegalActions || k > kActionNames.size()) {
    protocol_error("legal action count " + std::to_string(k) + " outside [4, 18]");
  }
  if (fields.size() != 4 + k) protocol_error("legal action list length mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = parse_number<int>(fields[4 + i], "action id");
    if (a < 0 || a >= static_cast<int>(kActionNames.size())) {
      protocol_error("action id " + std::to_string(a) + " outside [0, 17]");
    }
    hs.legal_actions.push_back(a);
  }
  return hs;
}

StepHeader parse_step_header(std::string_view line) {
  const auto fields = split_fields(line);
  if (fields.size() != 3 || fields[0] != "R") {
    protocol_error("malformed step reply: '" + std::string(line) + "'");
  }
  StepHeader h;
  h.reward = parse_number<double>(fields[1], "reward");
  if (fields[2] == "0") {
    h.done = false;
  } else if (fields[2] == "1") {
    h.done = true;
  } else {
    protocol_error("done flag must be 0 or 1");
  }
  return h;
}

Observation decode_planes(std::span<const std::uint8_t> bytes, std::size_t width,
                          std::size_t height) {
  const auto plane = width * height;
  if (bytes.size() != 3 * plane) protocol_error("frame size does not match dimensions");
  auto make = [&](std::size_t p) {
    std::vector<double> data(plane);
    for (std::size_t i = 0; i < plane; ++i) data[i] = bytes[p * plane + i] / 255.0;
    return Value::matrix(height, width, std::move(data));
  };
  return {make(0), make(1), make(2)};
}

Session::Session(const std::string& server, const std::vector<std::string>& args,
                 std::chrono::milliseconds timeout)
    : timeout_(timeout) {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw BridgeError(BridgeErrorKind::Io, std::string("socketpair: ") + std::strerror(errno));
  }
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>(server.c_str()));
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);

  pid_ = ::fork();
  if (pid_ < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw BridgeError(BridgeErrorKind::Io, std::string("fork: ") + std::strerror(errno));
  }
  if (pid_ == 0) {
    ::dup2(fds[1], STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::close(fds[0]);
    ::close(fds[1]);
    ::execv(server.c_str(), argv.data());
    ::_exit(127);
  }
  ::close(fds[1]);
  fd_ = fds[0];
}

Session::~Session() {
  if (fd_ >= 0) ::close(fd_);
  if (pid_ > 0) {
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, nullptr, 0);
  }
}

void Session::send(const std::string& message) {
  std::size_t sent = 0;
  while (sent < message.size()) {
    const auto n = ::send(fd_, message.data() + sent, message.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw BridgeError(BridgeErrorKind::ProcessExit, "server connection lost while writing");
    }
    sent += static_cast<std::size_t>(n);
  }
}

void Session::fill_buffer() {
  pollfd pfd{fd_, POLLIN, 0};
  const int ready = ::poll(&pfd, 1, static_cast<int>(timeout_.count()));
  if (ready == 0) throw BridgeError(BridgeErrorKind::Timeout, "server reply timed out");
  if (ready < 0) throw BridgeError(BridgeErrorKind::Io, std::strerror(errno));
  char chunk[65536];
  const auto n = ::read(fd_, chunk, sizeof(chunk));
  if (n == 0) throw BridgeError(BridgeErrorKind::ProcessExit, "server closed the connection");
  if (n < 0 && errno == ECONNRESET) {
    throw BridgeError(BridgeErrorKind::ProcessExit, "server connection reset");
  }
  if (n < 0) throw BridgeError(BridgeErrorKind::Io, std::strerror(errno));
  buffer_.append(chunk, static_cast<std::size_t>(n));
}

std::string Session::read_line() {
  for (;;) {
    const auto pos = buffer_.find('\n');
    if (pos != std::string::npos) {
      std::string line = buffer_.substr(0, pos);
      buffer_.erase(0, pos + 1);
      return line;
    }
    fill_buffer();
  }
}

std::vector<std::uint8_t> Session::read_exact(std::size_t n) {
  while (buffer_.size() < n) fill_buffer();
  std::vector<std::uint8_t> out(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
  buffer_.erase(0, n);
  return out;
}

const Handshake& Session::handshake(std::string_view rom) {
  if (info_) protocol_error("duplicate INIT on an initialised session");
  if (rom.empty() || rom.find_first_of(" \n") != std::string_view::npos) {
    protocol_error("invalid rom id");
  }
  send("INIT " + std::string(rom) + "\n");
  info_ = parse_handshake(read_line());
  return *info_;
}

StepResult Session::step(std::size_t local_action) {
  if (!info_) protocol_error("ACT before INIT");
  if (done_) protocol_error("ACT after episode end");
  if (local_action >= info_->legal_actions.size()) protocol_error("action outside legal set");
  send("ACT " + std::to_string(info_->legal_actions[local_action]) + "\n");
  const auto header = parse_step_header(read_line());
  const auto bytes = read_exact(3 * info_->width * info_->height);
  StepResult out;
  out.observation = decode_planes(bytes, info_->width, info_->height);
  out.reward = header.reward;
  out.done = header.done;
  done_ = header.done;
  ++frames_;
  return out;
}

AleEnvironment::AleEnvironment(BridgeConfig config) : config_(std::move(config)) {
  if (config_.server.empty()) {
    throw BridgeError(BridgeErrorKind::Io, "no emulator server configured (ale_server)");
  }
  session_ = open();
  handshake_ = *session_->info();
}

std::unique_ptr<Session> AleEnvironment::open() {
  std::vector<std::string> args;
  if (!config_.rom_dir.empty()) args.push_back(config_.rom_dir);
  auto session = std::make_unique<Session>(config_.server, args, config_.timeout);
  session->handshake(config_.rom);
  return session;
}

Observation AleEnvironment::reset(std::uint64_t) {
  session_ = open();
  const auto& hs = *session_->info();
  if (hs.width != handshake_.width || hs.height != handshake_.height ||
      hs.legal_actions != handshake_.legal_actions) {
    protocol_error("server changed screen or action set between sessions");
  }
  const auto blank = Value::filled(hs.height, hs.width, 0.0);
  return {blank, blank, blank};
}

StepResult AleEnvironment::step(std::size_t action) {
  if (!session_) protocol_error("step without an open session");
  return session_->step(action);
}

}  // namespace mtcgp::ale
