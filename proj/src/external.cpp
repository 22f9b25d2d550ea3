#include "idcopt/external.hpp"

#include <cerrno>
#include <chrono>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "idcopt/errors.hpp"

namespace idcopt {

namespace {

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { std::signal(SIGPIPE, SIG_IGN); });
}

bool write_all(int fd, const std::string& data) {
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    off += static_cast<std::size_t>(n);
  }
  return true;
}

}  // namespace

bool parse_cost_reply(const std::string& line, double& cost) {
  std::string s = line;
  if (!s.empty() && s.back() == '\r') s.pop_back();
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (errno != 0 || end == begin) return false;
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0' || !std::isfinite(v) || v < 0.0) return false;
  cost = v;
  return true;
}

ExternalObjective::ExternalObjective(ExternalEvaluatorConfig config, std::size_t dimension)
    : config_(std::move(config)), dimension_(dimension) {
  if (config_.argv.empty()) throw ConfigError("objective.command", "empty command line");
  if (!(config_.timeout_seconds > 0)) {
    throw ConfigError("objective.timeout", "timeout must be positive");
  }
  ignore_sigpipe();
}

ExternalObjective::~ExternalObjective() { shutdown(); }

void ExternalObjective::launch() const {
  if (launches_ > 0) {
    if (restarts_used_ >= config_.max_restarts) {
      throw EvaluatorError("external evaluator: restart limit reached", "");
    }
    ++restarts_used_;
  }
  ++launches_;

  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw EvaluatorError("pipe failed", "");
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw EvaluatorError("pipe failed", "");
  }

  std::vector<char*> args;
  for (const auto& a : config_.argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw EvaluatorError("fork failed", "");
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  pending_.clear();
}

void ExternalObjective::shutdown() const {
  if (pid_ < 0) return;
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  to_child_ = from_child_ = -1;

  // Give a well-behaved child a moment to exit on EOF, then kill it.
  int status = 0;
  for (int i = 0; i < 20; ++i) {
    if (::waitpid(pid_, &status, WNOHANG) == pid_) {
      pid_ = -1;
      return;
    }
    ::usleep(5000);
  }
  ::kill(pid_, SIGKILL);
  ::waitpid(pid_, &status, 0);
  pid_ = -1;
}

std::string ExternalObjective::exchange(const std::string& request,
                                        const std::string& genome_text) const {
  if (!write_all(to_child_, request)) {
    throw EvaluatorError("external evaluator: write failed (child exited?)", genome_text);
  }
  using clock = std::chrono::steady_clock;
  const auto deadline =
      clock::now() + std::chrono::duration_cast<clock::duration>(
                         std::chrono::duration<double>(config_.timeout_seconds));
  for (;;) {
    if (auto pos = pending_.find('\n'); pos != std::string::npos) {
      std::string line = pending_.substr(0, pos);
      pending_.erase(0, pos + 1);
      return line;
    }
    const auto left =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
    if (left <= 0) throw EvaluatorError("external evaluator: timeout", genome_text);
    pollfd pfd{from_child_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, static_cast<int>(left));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw EvaluatorError("external evaluator: poll failed", genome_text);
    }
    if (rc == 0) continue;
    char buf[4096];
    const ssize_t n = ::read(from_child_, buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw EvaluatorError("external evaluator: read failed", genome_text);
    }
    if (n == 0) throw EvaluatorError("external evaluator: child exited", genome_text);
    pending_.append(buf, static_cast<std::size_t>(n));
  }
}

double ExternalObjective::cost(const Genome& g) const {
  std::lock_guard lock(mutex_);
  const std::string text = g.to_text();
  if (g.size() != dimension_) {
    throw EvaluatorError("external evaluator: genome length mismatch", text);
  }
  try {
    if (pid_ < 0) launch();
    const std::string line = exchange(text + "\n", text);
    double value = 0.0;
    if (!parse_cost_reply(line, value)) {
      throw EvaluatorError("external evaluator: malformed reply '" + line + "'", text);
    }
    return value;
  } catch (const EvaluatorError& e) {
    shutdown();
    if (e.genome().empty()) throw EvaluatorError(e.what(), text);
    throw;
  }
}

}  // namespace idcopt
