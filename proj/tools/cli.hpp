#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace hqx::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

enum class Format { csv, json };

// Everything a command prints. JSON layout:
//   {schema_version, command, params, rows[], summary}
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<nlohmann::ordered_json> rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string to_json(const OutputRecord& record);
OutputRecord from_json(const std::string& text);

/// Header row plus one line per row; columns follow the first row's keys.
/// Arrays become ';'-joined cells and null becomes "n/a".
std::string to_csv(const OutputRecord& record);

/// Inclusive "a..b" or a single value, both nonnegative.
struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};
Range parse_range(const std::string& text);

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqx::cli
