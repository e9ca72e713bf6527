#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hamsense::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

enum class OutputFormat { Records, Csv };

struct RunConfig {
  std::uint64_t cap_vertices = 10'000'000;
  std::uint64_t cap_subsets = 50'000'000;
  std::uint64_t cap_functions = 1'000'000;
  OutputFormat format = OutputFormat::Records;
  std::optional<std::string> out_path;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
};

// Built-in defaults overridden by HAMSENSE_CAP_VERTICES, HAMSENSE_CAP_SUBSETS and
// HAMSENSE_CAP_FUNCTIONS when set.
RunConfig default_config();

// Runs one command line (args exclude the program name). Returns 0 on success,
// 2 when a checked claim fails, 1 for usage, input, resource-cap or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamsense::cli
