#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "splice_alex/cyclotomic.hpp"
#include "splice_alex/module.hpp"
#include "splice_alex/splice_diagram.hpp"

namespace splice_alex::report {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Format { Text, Json };

/// Exit codes: 0 success, 1 domain or validation failure, 2 usage or syntax.
struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct Style {
  Format format = Format::Text;
  bool color = false;
};

/// {"factored": "(t-1)*...", "expanded": [[exponent, numerator, denominator], ...]}
nlohmann::json polynomial_json(const CycloProduct& p);
nlohmann::json polynomial_json(const LaurentPoly& p);
nlohmann::json jordan_json(const std::vector<JordanBlock>& blocks);

/// "sha256:<hex>" of the canonical serialization.
std::string diagram_digest(const SpliceDiagram& d);

// Per-command result documents for an already parsed diagram. They throw
// splice_alex::Error on domain failures.
nlohmann::json check_results(const SpliceDiagram& d);
nlohmann::json invariants_results(const SpliceDiagram& d);
nlohmann::json alexander_results(const SpliceDiagram& d);
nlohmann::json at_infinity_results(const SpliceDiagram& d);
/// Sets "agree" on every entry of "comparisons".
nlohmann::json oracle_results(const SpliceDiagram& d);
nlohmann::json oracle_hb_results(const std::vector<std::int64_t>& d_list, std::int64_t d);
nlohmann::json oracle_torus_results(std::int64_t p, std::int64_t q);

/// Reads, parses and runs one command ("check", "invariants", "alexander",
/// "at-infinity", "oracle") on one file. Output is fully buffered.
CommandOutput run_file(std::string_view command, const std::string& path, const Style& style);

CommandOutput run_oracle_hb(const std::vector<std::int64_t>& args, const Style& style);
CommandOutput run_oracle_torus(std::int64_t p, std::int64_t q, const Style& style);

}  // namespace splice_alex::report
