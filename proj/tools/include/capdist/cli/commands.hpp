#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capdist::cli {

enum class Format { text, json, csv };

struct OutputDoc {
  Format format = Format::text;
  std::string payload;
};

/// Bad input from the command line; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDistMaxY = 300;
inline constexpr int kDistMaxYpq = 30;
inline constexpr int kSeqMax = 10000;
inline constexpr int kTableMax = 60;

OutputDoc cmd_show(std::string_view composition, Format format);
OutputDoc cmd_dist(int n, std::string_view vars, Format format);
OutputDoc cmd_seq(std::string_view name, int n_max, Format format);
OutputDoc cmd_table(std::string_view stat, int n_max, Format format);

struct VerifyOptions {
  std::optional<int> n_max;
  unsigned threads = 1;
  bool timing = true;
};

struct VerifyOutcome {
  OutputDoc doc;
  int exit_code = kExitPass;
};

/// `suite` is a catalog name or "all".
VerifyOutcome cmd_verify(std::string_view suite, const VerifyOptions& options, Format format);

struct GfOptions {
  int n_max = 10;
  std::optional<int> k;
  bool p_symbolic = false;
};

OutputDoc cmd_gf(std::string_view model, const GfOptions& options, Format format);

/// Full command-line entry point. Writes results to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capdist::cli
