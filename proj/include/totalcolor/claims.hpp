#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "totalcolor/graph_io.hpp"

namespace totalcolor {

enum class Verdict
{
  Confirmed,
  BoundOnly,
  RefutedAtInstance,
  Inapplicable,
};

std::string_view verdict_name(Verdict v);
/// Throws std::invalid_argument for an unknown name.
Verdict verdict_from_name(std::string_view name);

enum class ClaimKind
{
  Exact,   // the quantity equals the claimed value
  AtMost,  // the quantity is at most the claimed value
};

struct ClaimInstance
{
  std::string theorem;
  int n = 0;
  int k = 0;
  std::vector<int> t1 = {};  // dihedral-same-difference only
  std::vector<int> t2 = {};

  std::string label() const;
  friend bool operator==(const ClaimInstance&, const ClaimInstance&) = default;
};

/// One audited (theorem, instance) row. `statement` judges the theorem's
/// claim from every number gathered; `proof_step` judges the published
/// construction as implemented here.
struct ClaimReport
{
  ClaimInstance instance;
  std::string quantity = "chi''";
  int vertices = 0;
  int edges = 0;
  int max_degree = 0;

  std::optional<int> constructed;
  std::string construction_failure;
  std::vector<std::string> construction_log;

  std::string solver;  // what the solver did, in words
  std::optional<int> solver_lower;
  std::optional<int> solver_upper;
  bool solver_exact = false;
  std::int64_t solver_nodes = 0;

  int lower = 0;
  std::optional<int> upper;
  ClaimKind kind = ClaimKind::Exact;
  int claimed = 0;
  std::string claim;

  Verdict statement = Verdict::BoundOnly;
  Verdict proof_step = Verdict::BoundOnly;
  std::optional<bool> tcc;  // Delta+1 <= chi'' <= Delta+2, once chi'' is settled
  std::vector<std::string> notes;

  bool settled() const { return upper && *upper == lower; }
  bool passing() const;
};

/// Largest total graph (vertices plus edges) handed to the exact solver.
constexpr int solver_size_limit = 400;

std::vector<std::string> theorem_ids();

/// Runs the theorem's construction, verifies it, runs the exact solver
/// when the instance is small enough, and judges the claim. Throws
/// std::invalid_argument for an unknown theorem id or missing parameters.
ClaimReport audit_claim(const ClaimInstance& instance, std::int64_t budget);

std::vector<ClaimInstance> default_claim_matrix();

/// 5,000,000 search nodes unless TOTALCOLOR_BUDGET holds a positive integer.
std::int64_t default_budget();

Json report_to_json(const ClaimReport& r);
/// theorem | instance | constructed | exact | claimed | verdict | proof step
std::string reports_table(const std::vector<ClaimReport>& reports);

struct ManifestEntry
{
  std::string theorem;
  std::string instance;
  Verdict statement;
  Verdict proof_step;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// {"non_passing": [{"theorem", "instance", "statement", "proof_step"}, ...]}
std::vector<ManifestEntry> manifest_from_json(const Json& doc);
Json manifest_to_json(const std::vector<ManifestEntry>& entries);

struct ManifestCheck
{
  std::vector<std::string> unexpected;  // non-passing rows the manifest lacks
  std::vector<std::string> missing;     // manifest rows that did not show up
  bool matches() const { return unexpected.empty() && missing.empty(); }
};

ManifestCheck check_manifest(const std::vector<ClaimReport>& reports, const std::vector<ManifestEntry>& manifest);

}  // namespace totalcolor
