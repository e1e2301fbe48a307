#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilcontact/sym_cubic.hpp"

namespace nilcontact::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100;
  std::vector<std::uint64_t> primes{5, 7, 11, 13};
  std::uint64_t probe_budget = 1'000'000;
  bool long_run = false;
  bool timings = false;  // off by default so reports stay byte-identical
};

// Throws InputError when samples == 0 or a prime is not prime.
void validate(const RunConfig& cfg);

// Exit codes: 0 success, 1 a check failed or the input was rejected, 2 malformed
// input or usage.
enum Exit : int { kOk = 0, kFail = 1, kBadInput = 2 };

nlohmann::json check_report(const SymCubic& t);

// which: all | jacobi | group | contact | tau | moment
nlohmann::json verify_report(const SymCubic& t, const std::string& which, const RunConfig& cfg);

// Throws TypeRejected for unsupported types. compare may be empty.
struct ExtractOutput {
  nlohmann::json report;
  nlohmann::json cubic;
  nlohmann::json grading;
  nlohmann::json embedding;
};
ExtractOutput extract_report(const std::string& type, const std::string& compare, const RunConfig& cfg);

std::string render_markdown(const nlohmann::json& report);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilcontact::cli
