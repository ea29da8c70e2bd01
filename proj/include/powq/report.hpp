#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powq/extension.hpp"
#include "powq/group.hpp"

namespace powq {

inline constexpr const char* kToolVersion = "powq 0.1.0";

/// Largest max_order accepted by sweep_forgetful.
inline constexpr std::size_t kForgetfulSweepBound = 64;

struct CheckRecord {
  std::string subject;  // group label or "A / B" pair label
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct GroupRecord {
  std::string label;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t num_classes = 0;
  std::optional<AbelianInvariants> b_group;
  std::optional<AbelianInvariants> h1;
  std::optional<AbelianInvariants> h2;
  // Adjoint sweep only. status: "ok", "limit_exceeded", "centrality_failure" or "error".
  std::string status;
  std::optional<std::size_t> e_order;
  std::optional<std::size_t> a_order;
  std::optional<std::size_t> a_cap_commutator;
  std::optional<bool> split;
};

struct PairRecord {
  std::string first;
  std::string second;
  std::size_t order = 0;
  bool pq_iso = false;
  bool group_iso = false;
  std::optional<bool> centers_iso;
  std::optional<bool> central_quotients_iso;
};

struct Counterexample {
  std::string first;
  std::string second;
  std::string reason;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string sweep;  // "forgetful", "adjoint" or empty
  std::size_t max_order = 0;
  std::optional<std::size_t> limit;
  std::vector<std::string> families;
  std::string scope_note;
  std::vector<GroupRecord> groups;
  std::vector<PairRecord> pairs;
  std::vector<CheckRecord> checks;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, double> timing_seconds;

  std::size_t failed_checks() const;
  /// 0 when every check passed and nothing was found, 2 for counterexamples,
  /// 3 for any failed check (takes precedence).
  int exit_code() const;
};

/// Same-order catalog pairs: pq_iso versus group_iso, and for pq-isomorphic
/// pairs the center and central quotient theorems. Throws SizeBound above
/// kForgetfulSweepBound.
VerificationReport sweep_forgetful(std::size_t max_order);

/// Per catalog group: gr_pq, verify_five_term and check_split. A split is
/// expected (and checked) for abelian and symmetric groups.
VerificationReport sweep_adjoint(std::size_t max_order, std::size_t limit = kDefaultCosetLimit);

/// Serializes with sorted keys and fixed record order. format is "json" or
/// "text"; anything else throws UnsupportedFormat.
std::string emit_report(const VerificationReport& report, const std::string& format);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

}  // namespace powq
