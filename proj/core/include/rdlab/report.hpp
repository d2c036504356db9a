#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace rdlab {

using ordered_json = nlohmann::ordered_json;

// pass: exact or exhaustive; evidence: sampled/probabilistic probe;
// fail: concrete counterexample in the witness; error: could not run
// (bad configuration, budget exhaustion)
enum class CheckStatus { pass, fail, evidence, error };

const char* to_string(CheckStatus s);

struct CheckReport {
  std::string id;
  std::string paper_anchor;
  ordered_json params = ordered_json::object();
  CheckStatus status = CheckStatus::error;
  ordered_json witness = ordered_json::object();
  ordered_json stats = ordered_json::object();
  uint64_t seed = 0;
  uint64_t elapsed_ms = 0;  // stays 0 unless timings were requested

  // record field order: id, params, status, witness, stats, seed,
  // elapsed, paper_anchor
  ordered_json to_json() const;
  std::string to_plain() const;
};

}  // namespace rdlab
