#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "psisum/rational.hpp"

namespace psisum {

enum class Verdict { Holds, Equality, Fails, NotApplicable };
enum class Relation { Lt, Le, Eq, Ne, Gt, Ge };

std::string to_string(Verdict v);
std::string to_string(Relation r);
std::string symbol(Relation r);

/// Verdict of "lhs <relation> rhs": Equality when a non-strict relation holds
/// with lhs == rhs, Holds when it holds otherwise, Fails when it does not.
Verdict evaluate(const Rational& lhs, Relation relation, const Rational& rhs);

/// One exact comparison inside a report.
struct Check {
  std::string label;
  Rational lhs;
  Relation relation = Relation::Eq;
  Rational rhs;
  std::string witness;

  Verdict verdict() const { return evaluate(lhs, relation, rhs); }
};

/// Outcome of verifying one claim over a parameter range. The verdict is
/// always recomputed from the recorded exact values.
struct VerificationReport {
  std::string claim_id;
  std::vector<std::pair<std::string, std::string>> params;
  /// "exhaustive", "family-restricted" or "arithmetic".
  std::string scope = "arithmetic";
  std::vector<Check> checks;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  bool applicable = true;

  VerificationReport& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  VerificationReport& add(std::string label, Rational lhs, Relation relation, Rational rhs,
                          std::string witness = {}) {
    checks.push_back({std::move(label), std::move(lhs), relation, std::move(rhs), std::move(witness)});
    return *this;
  }

  /// Fails if any check fails; Equality if a non-strict bound (<=, >=) is
  /// attained; Holds otherwise.
  Verdict verdict() const;
  std::size_t failures() const;
};

/// Appends every check, witness and note of `part` to `into`.
void merge_into(VerificationReport& into, const VerificationReport& part);

nlohmann::json to_json(const VerificationReport& report);
/// {"schema": 1, "reports": [...]} plus any extra top-level fields.
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, nlohmann::json extra = {});

/// Columns: claim_id, params, lhs, rhs, verdict, witness; one row per check.
void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports);
void write_table(std::ostream& os, const std::vector<VerificationReport>& reports);

bool all_hold(const std::vector<VerificationReport>& reports);

}  // namespace psisum
