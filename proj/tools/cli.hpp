#ifndef MPBERN_TOOLS_CLI_HPP
#define MPBERN_TOOLS_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpbern/congruence.hpp"
#include "mpbern/core.hpp"
#include "mpbern/numbers.hpp"

namespace mpbern::cli {

enum class Command { Compute, Verify, Mahler, Scan };
enum class Suite { Kummer, Relations, Prelemma, Keylemma, Classical, Counterexample, Oracle };
enum class Format { Json, Csv, Table };
enum class MethodChoice { Explicit, Series, Both };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flag values, missing inputs, malformed ranges. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool single() const { return lo == hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "a..b" or "a"; throws UsageError naming the flag.
IntRange parse_range(const std::string& text, const std::string& flag);

/// "arithmetic:D", "all:NMAX" or "list:m-n,m-n,...". The m range of the
/// arithmetic strategy is filled in separately.
PairStrategy parse_pairs(const std::string& text);

struct RunConfig {
  Command command = Command::Compute;
  Suite suite = Suite::Kummer;
  std::vector<Index> indices;
  std::vector<Family> families;  ///< empty: command default
  std::vector<std::int64_t> primes;
  std::optional<IntRange> N;
  std::optional<IntRange> m;
  std::optional<IntRange> n;
  PairStrategy pairs;
  MethodChoice method = MethodChoice::Explicit;
  std::int64_t j_max = 2000;
  std::int64_t a_max = 300;
  std::int64_t max_mn = 0;  ///< 0: suite default
  std::optional<Format> format;
  std::string output;
  unsigned jobs = 1;
};

/// Parses argv (without the program name) plus an optional --config file.
/// Throws UsageError on any problem; returns nullopt when help was printed.
std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out);

/// Runs the configured command, writing records to `out`.
/// Returns 0 on success and 1 when a verification fails.
int run(const RunConfig& config, std::ostream& out);

/// Full entry point: parse, open --output if given, run. Usage errors are
/// reported on `err` and give exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpbern::cli

#endif  // MPBERN_TOOLS_CLI_HPP
