// Copyright 2026 The agentic-typer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agentic_typer/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <thread>

extern char** environ;

namespace agentic_typer {

namespace {

struct Pipe {
  int fds[2] = {-1, -1};
  Pipe() {
    if (::pipe2(fds, O_CLOEXEC) != 0) {
      throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
    }
  }
  ~Pipe() { CloseBoth(); }
  void CloseBoth() {
    Close(0);
    Close(1);
  }
  void Close(int i) {
    if (fds[i] >= 0) ::close(fds[i]);
    fds[i] = -1;
  }
  int Release(int i) {
    const int fd = fds[i];
    fds[i] = -1;
    return fd;
  }
};

int DecodeStatus(int status) {
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

// Child side after fork(): only async-signal-safe calls until exec.
[[noreturn]] void ExecChild(const std::vector<char*>& argv, const char* cwd,
                            int in_fd, int out_fd, int err_fd, int status_fd) {
  if (in_fd >= 0) ::dup2(in_fd, 0);
  ::dup2(out_fd, 1);
  ::dup2(err_fd, 2);
  if (cwd != nullptr && ::chdir(cwd) != 0) {
    const int e = errno;
    [[maybe_unused]] ssize_t w = ::write(status_fd, &e, sizeof e);
    ::_exit(127);
  }
  ::execvp(argv[0], argv.data());
  const int e = errno;
  [[maybe_unused]] ssize_t w = ::write(status_fd, &e, sizeof e);
  ::_exit(127);
}

// Reads the exec-status pipe: 0 if exec succeeded, else the child's errno.
int ExecErrno(int status_read_fd) {
  int e = 0;
  ssize_t n;
  do {
    n = ::read(status_read_fd, &e, sizeof e);
  } while (n < 0 && errno == EINTR);
  ::close(status_read_fd);
  return n == sizeof e ? e : 0;
}

}  // namespace

ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& cwd) {
  if (argv.empty()) throw std::invalid_argument("empty argv");
  std::vector<std::string> args = argv;
  std::vector<char*> cargv;
  for (auto& a : args) cargv.push_back(a.data());
  cargv.push_back(nullptr);
  const std::string cwd_str = cwd.string();

  Pipe out, err, status;
  const int devnull = ::open("/dev/null", O_RDONLY | O_CLOEXEC);
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(devnull);
    throw std::runtime_error(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ExecChild(cargv, cwd_str.empty() ? nullptr : cwd_str.c_str(), devnull,
              out.fds[1], err.fds[1], status.fds[1]);
  }
  ::close(devnull);
  out.Close(1);
  err.Close(1);
  status.Close(1);
  const int exec_errno = ExecErrno(status.Release(0));

  ProcessResult result;
  pollfd fds[2] = {{out.fds[0], POLLIN, 0}, {err.fds[0], POLLIN, 0}};
  std::string* sinks[2] = {&result.out, &result.err};
  int open_count = 2;
  char buf[65536];
  while (open_count > 0) {
    if (::poll(fds, 2, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int i = 0; i < 2; ++i) {
      if (fds[i].fd < 0 || fds[i].revents == 0) continue;
      const ssize_t n = ::read(fds[i].fd, buf, sizeof buf);
      if (n > 0) {
        sinks[i]->append(buf, static_cast<size_t>(n));
      } else if (n == 0 || errno != EINTR) {
        fds[i].fd = -1;
        --open_count;
      }
    }
  }
  int wstatus = 0;
  while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {
  }
  if (exec_errno != 0) {
    throw std::runtime_error("cannot execute " + argv[0] + ": " +
                             std::strerror(exec_errno));
  }
  result.exit_code = DecodeStatus(wstatus);
  return result;
}

std::optional<std::filesystem::path> FindOnPath(const std::string& name) {
  if (name.find('/') != std::string::npos) {
    if (::access(name.c_str(), X_OK) == 0) return std::filesystem::path(name);
    return std::nullopt;
  }
  const char* path = std::getenv("PATH");
  if (path == nullptr) return std::nullopt;
  std::string_view rest(path);
  while (true) {
    const size_t colon = rest.find(':');
    std::string dir(rest.substr(0, colon));
    if (dir.empty()) dir = ".";
    const std::filesystem::path candidate = std::filesystem::path(dir) / name;
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec) &&
        ::access(candidate.c_str(), X_OK) == 0) {
      return candidate;
    }
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return std::nullopt;
}

LineChannel::LineChannel(const std::string& command,
                         const std::filesystem::path& cwd) {
  // A backend exiting mid-write must surface as a failed write.
  static const bool sigpipe_ignored = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;
  std::vector<std::string> args = {"/bin/sh", "-c", command};
  std::vector<char*> cargv;
  for (auto& a : args) cargv.push_back(a.data());
  cargv.push_back(nullptr);
  const std::string cwd_str = cwd.string();

  Pipe in, out, status;
  const pid_t pid = ::fork();
  if (pid < 0) {
    throw std::runtime_error(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    // stderr passes through to ours.
    ExecChild(cargv, cwd_str.empty() ? nullptr : cwd_str.c_str(), in.fds[0],
              out.fds[1], 2, status.fds[1]);
  }
  in.Close(0);
  out.Close(1);
  status.Close(1);
  const int exec_errno = ExecErrno(status.Release(0));
  pid_ = pid;
  to_child_ = in.Release(1);
  from_child_ = out.Release(0);
  if (exec_errno != 0) {
    throw std::runtime_error("cannot start backend: " +
                             std::string(std::strerror(exec_errno)));
  }
}

LineChannel::~LineChannel() {
  if (to_child_ >= 0) ::close(to_child_);
  if (pid_ > 0) {
    int wstatus = 0;
    bool reaped = false;
    for (int i = 0; i < 50 && !reaped; ++i) {
      const pid_t r = ::waitpid(pid_, &wstatus, WNOHANG);
      if (r == pid_ || r < 0) {
        reaped = true;
      } else {
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
      }
    }
    if (!reaped) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, &wstatus, 0);
    }
  }
  if (from_child_ >= 0) ::close(from_child_);
}

bool LineChannel::WriteLine(const std::string& line) {
  std::string data = line;
  data.push_back('\n');
  size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(to_child_, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    off += static_cast<size_t>(n);
  }
  return true;
}

std::optional<std::string> LineChannel::ReadLine(
    std::chrono::milliseconds timeout) {
  timed_out_ = false;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  char buf[65536];
  while (true) {
    const size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out_ = true;
      return std::nullopt;
    }
    pollfd pfd{from_child_, POLLIN, 0};
    const int r = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (r < 0) {
      if (errno == EINTR) continue;
      return std::nullopt;
    }
    if (r == 0) continue;
    const ssize_t n = ::read(from_child_, buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return std::nullopt;
    buffer_.append(buf, static_cast<size_t>(n));
  }
}

}  // namespace agentic_typer
