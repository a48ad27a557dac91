#pragma once

// End-to-end verification run: configuration, report entries, rendering.

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fpp/json_io.hpp"
#include "fpp/order.hpp"

namespace fpp {

struct Config {
  int cyclotomic_modulus = 7;
  std::string alpha_expression = "lambda/lambda_bar";
  CycElt alpha_value = fpp::alpha();
  std::array<std::string, 3> b_expressions{"lambda + lambda_bar", "lambda_bar", "lambda_bar"};
  std::array<std::string, 2> block_scale_expressions{"lambda_bar", "lambda_bar"};  // factors on the u and u^2 blocks
  std::map<std::string, Rat> local_factors;
  long congruence_index = 7;
  long normalizer_index = 3;
  std::filesystem::path gamma_dataset;        // empty: derive in process
  std::filesystem::path gamma_tilde_dataset;  // empty: derive in process
  Json canonical;                             // normalized form used for hashing
};

/// b = b0 + b1 u + b2 u^2 over the configured alpha.
AlgElt configured_b(const Config& config);
/// o_L + o_L s1 u + o_L s2 u^2 over the configured alpha.
OrderBasis configured_order(const Config& config);

/// Built-in defaults (no dataset files).
Config default_config();
/// Parses a config object; relative dataset paths resolve against base_dir. Throws ConfigError.
Config parse_config(const Json& j, const std::filesystem::path& base_dir);
Config load_config(const std::filesystem::path& path);

enum class Status { match, mismatch, derived_only, flagged };
std::string to_string(Status s);

struct ReportEntry {
  std::string id;
  std::string anchor;  // the claim the entry checks
  Json expected;       // null for derived-only entries
  Json computed;
  Status status = Status::derived_only;
  std::string note;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;
  Json config;
  std::string version;

  bool has_mismatch() const;
  /// The deterministic part: entries, config and version.
  Json body() const;
};

/// FNV-1a 64-bit over the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Runs every check in order. Module errors are rethrown with the entry id prepended.
VerificationReport run_all(const Config& config);

/// {"report": body, "metadata": {config_hash, report_hash, version, timestamp}}.
std::string render_json(const VerificationReport& report, const std::string& timestamp);
std::string render_markdown(const VerificationReport& report);

/// Library version string.
std::string version();

}  // namespace fpp
