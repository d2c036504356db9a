#include "rdlab/report.hpp"

#include <sstream>

namespace rdlab {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::evidence: return "evidence";
    case CheckStatus::error: return "error";
  }
  return "error";
}

ordered_json CheckReport::to_json() const {
  ordered_json j;
  j["id"] = id;
  j["params"] = params;
  j["status"] = to_string(status);
  j["witness"] = witness;
  j["stats"] = stats;
  j["seed"] = seed;
  j["elapsed"] = elapsed_ms;
  j["paper_anchor"] = paper_anchor;
  return j;
}

std::string CheckReport::to_plain() const {
  std::ostringstream os;
  os << "[" << to_string(status) << "] " << id;
  if (!params.empty()) os << "  " << params.dump();
  os << "\n";
  if (!witness.empty()) os << "  witness: " << witness.dump() << "\n";
  if (!stats.empty()) os << "  stats:   " << stats.dump() << "\n";
  os << "  seed: " << seed << "  elapsed: " << elapsed_ms << "ms\n";
  os << "  anchor: " << paper_anchor << "\n";
  return os.str();
}

}  // namespace rdlab
