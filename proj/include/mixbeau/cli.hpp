#pragma once

// Subcommands of the `mixbeau` tool. Each returns its complete output and
// exit code so the same code paths are testable in-process.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "mixbeau/beauville.hpp"
#include "mixbeau/groups.hpp"

namespace mixbeau::cli {

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view s);

struct RunConfig {
  int k = 3;
  std::optional<int> k_max;  // with k: the range k..k_max
  Format format = Format::text;
  std::size_t budget = kDefaultBudget;
  int threads = 0;
  std::optional<std::filesystem::path> cache_dir;
  bool bprime = false;
  bool timings = false;
  std::string gen = "all";     // powers
  std::string pair = "all";    // schemes: x,y | x0,y0 | x1,y1
  std::string regime = "all";  // schemes: base | cube | odd | even
  bool psi = false;            // homcheck: reality automorphism of G_k
};

struct CommandResult {
  std::string out;
  int exit_code = 0;
};

struct BeauvilleReport {
  int k = 0;
  bool power_of_two = false;
  std::size_t order_g = 0, order_h = 0;
  bool condition_a = false;
  BVerdict condition_b;
  std::optional<std::string> witness_power;  // e.g. "x^4" when the witness is a power of x
  std::optional<BPrimeVerdict> condition_b_prime;
  CVerdict condition_c;
  std::optional<double> elapsed;
  /// A, B, C all hold, or k is a power of two and exactly (B) fails.
  bool as_predicted = false;
};

bool is_power_of_two(int k);

BeauvilleReport verify(int k, const RunConfig& cfg);
nlohmann::json report_to_json(const BeauvilleReport& r);

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_orders(const RunConfig& cfg);
CommandResult cmd_powers(const RunConfig& cfg);
CommandResult cmd_schemes(const RunConfig& cfg);
CommandResult cmd_surface(const RunConfig& cfg);
CommandResult cmd_homcheck(const RunConfig& cfg);
CommandResult cmd_sigma(const RunConfig& cfg);

}  // namespace mixbeau::cli
