#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minkpot/catalog.hpp"
#include "minkpot/verify.hpp"

namespace minkpot::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

// Thrown for malformed configs and bad command-line values; maps to exit 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

struct RunConfig {
  std::string class_id;
  ParamMap params;
  // Empty optional: draw default slots from the seed.
  std::optional<SlotSet> slots;
  bool example_slots = false;
  int points = 100;
  std::uint64_t seed = 42;
  double tol = kVerifyTolerance;
};

// JSON document with keys class, params, slots, points, seed, tol. Slots are
// either the string "example" or an object mapping slot labels to coefficient
// tables {"i,j,k": coef}, one exponent per slot argument.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Resolves the class and builds the slot set a config describes.
struct Instance {
  const ClassEntry* entry = nullptr;
  ParamMap params;
  SlotSet slots;
};
Instance make_instance(const RunConfig& cfg);

enum class Format { Table, Json, Csv };

inline constexpr const char* kCsvHeader = "class,dim,points,max_residual,closedness_max,detected_dim,pass,seed";

void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format format);
std::string report_json_line(const VerificationReport& r);

// Full command-line entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace minkpot::cli
