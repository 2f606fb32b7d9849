#pragma once

// Runs the rhspaces binary through the shell and captures its output.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef RHSPACES_CLI_PATH
#error "RHSPACES_CLI_PATH must point at the rhspaces executable"
#endif

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("rhspaces-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

// `args` is appended verbatim to the command line; `env` is prepended (e.g. "RH_SEED=3").
inline Result run(const std::string& args, const std::string& env = "") {
  const auto err_path = scratch_dir() / "stderr.txt";
  const std::string command = env + (env.empty() ? "" : " ") + "'" RHSPACES_CLI_PATH "' " + args + " 2>'" +
                              err_path.string() + "'";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  Result result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::ostringstream text;
  text << err.rdbuf();
  result.err = text.str();
  return result;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace cli
