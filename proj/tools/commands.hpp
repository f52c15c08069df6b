#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fsst::cli {

// Bad flags or flag combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

struct RunConfig {
  std::string signal = "chirp";
  std::size_t n = 200;
  std::size_t support = 10;
  double noise = 0.0;
  std::uint64_t seed = 42;
  int band = 6;  // -1 selects every bin
  std::size_t component = 0;
  std::string kind = "sst";
  std::string in;
  std::string out;
  std::string model;
  std::string stft;
  std::string sst;
  bool log_scale = false;
};

// Each command writes its outputs to the paths in `config` and its
// diagnostics to `err`. They throw UsageError or fsst::DataError.
void cmd_gen(const RunConfig& config, std::ostream& err);
void cmd_transform(const RunConfig& config, std::ostream& err);
void cmd_reconstruct(const RunConfig& config, std::ostream& err);
void cmd_metrics(const RunConfig& config, std::ostream& err);
void cmd_plot(const RunConfig& config, std::ostream& err);

// Parses argv, dispatches, and maps errors to exit codes.
int run(int argc, char** argv, std::ostream& err);

}  // namespace fsst::cli
