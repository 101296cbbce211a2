#pragma once

#include "hb/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hb {

constexpr int kReportSchemaVersion = 1;

// Weights as {"num": [...], "den": d} with one common denominator.
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

// Stable, versioned report schema.  Top-level "grades" repeats the first
// available form; "forms" carries every form.
// pair.family and pair.params are read back from the pair key.
nlohmann::json report_to_json(const VerificationReport& r, bool with_timings = true);
VerificationReport report_from_json(const nlohmann::json& j);

std::string report_human(const VerificationReport& r, bool verbose = false);
// With a pair, K^sigma weights are written in mu_i, nu_i, xi_i (fundamental
// weights of successive simple factors) and C_a for u(1) characters.
std::string report_latex(const VerificationReport& r, const PairDescriptor* pair = nullptr);
std::string gs_weight_tex(const PairDescriptor& pair, const Weight& w);
std::string omega_tex(const Weight& w, const std::string& sym = "\\omega");

// One JSON file per (pair, kind, grade), keyed by a hash that includes the
// catalogue checksum and the schema version.
class ReportCache {
 public:
  explicit ReportCache(std::string dir, uint32_t catalog_checksum);
  bool enabled() const { return !dir_.empty(); }
  std::optional<VerificationReport> get(const std::string& kind, const std::string& pair_key, int max_grade) const;
  void put(const VerificationReport& r) const;
  std::string path_for(const std::string& kind, const std::string& pair_key, int max_grade) const;

 private:
  std::string dir_;
  uint32_t checksum_;
};

}  // namespace hb
