#ifndef BMFRENET_CLI_HPP
#define BMFRENET_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bmfrenet/verify.hpp"

namespace bmfrenet {

enum class Command { Verify, Frame, Curve, Classify, Structure };
enum class OutputFormat { Json, Csv };

/// Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
/// failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerifyFailed = 3;

struct RunConfig {
  Command command = Command::Verify;
  double a = 0.0;
  double b = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  bool beta_given = false;
  double t_min = 0.0;
  double t_max = 1.0;
  int steps = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
  double tol = 1e-9;

  /// steps >= 1, t_min <= t_max, tol > 0; CSV only for the curve command.
  void validate() const;  // throws std::invalid_argument
};

/// Serializes with every floating-point number at 17 significant digits and
/// object keys in sorted order, so equal documents are byte-identical.
std::string dump_json(const nlohmann::json& j, int indent = 2);

nlohmann::json frame_document(const RunConfig& config);
nlohmann::json curve_document(const RunConfig& config);
std::string curve_csv(const RunConfig& config);
nlohmann::json classify_document(const RunConfig& config);
nlohmann::json structure_document(const RunConfig& config);
nlohmann::json verify_document(const VerifyReport& report);

/// Parses argv, dispatches the command, writes the document to out and
/// diagnostics to err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace bmfrenet

#endif
