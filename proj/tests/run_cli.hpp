#pragma once

// popen-based driver for tests that exercise the command-line binary.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace cli_driver {

struct Result {
    std::string out; // stdout only
    int exit_code = -1;
};

/// Runs `env_prefix binary args...` with stderr routed to stderr_sink
/// (default: dropped) and captures stdout and the exit status.
inline Result run(const std::string& binary, const std::string& args,
                  const std::string& stderr_sink = "/dev/null",
                  const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "'" + binary + "' " + args + " 2>" + stderr_sink;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
    Result r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace cli_driver
