#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace radix::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kRefused = 3;

struct CliConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::uint64_t seed = 0;
  int verbosity = 0;
  std::uint32_t max_degree = 256;
  // verify: random relabelings x -> x_alpha checked after a passing run.
  std::size_t samples = 0;
  // character: exponent, permutations, variable count (0 = inferred).
  std::uint32_t q = 0;
  std::vector<std::string> perms;
  std::size_t n = 0;
};

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_obstruct(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_character(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_symmetrize(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_abelize(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_builtin(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatches on cfg.command; honours cfg.output.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace radix::cli
