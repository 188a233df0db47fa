#include "psisum/report.hpp"

#include <algorithm>
#include <ostream>

namespace psisum {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Lt: return "lt";
    case Relation::Le: return "le";
    case Relation::Eq: return "eq";
    case Relation::Ne: return "ne";
    case Relation::Gt: return "gt";
    case Relation::Ge: return "ge";
  }
  return "?";
}

std::string symbol(Relation r) {
  switch (r) {
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

Verdict evaluate(const Rational& lhs, Relation relation, const Rational& rhs) {
  const auto cmp = lhs <=> rhs;
  bool ok = false;
  switch (relation) {
    case Relation::Lt: ok = cmp < 0; break;
    case Relation::Le: ok = cmp <= 0; break;
    case Relation::Eq: ok = cmp == 0; break;
    case Relation::Ne: ok = cmp != 0; break;
    case Relation::Gt: ok = cmp > 0; break;
    case Relation::Ge: ok = cmp >= 0; break;
  }
  if (!ok) return Verdict::Fails;
  const bool non_strict = relation == Relation::Le || relation == Relation::Ge || relation == Relation::Eq;
  return non_strict && cmp == 0 ? Verdict::Equality : Verdict::Holds;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.verdict() == Verdict::Fails; }));
}

Verdict VerificationReport::verdict() const {
  if (!applicable) return Verdict::NotApplicable;
  if (failures() > 0) return Verdict::Fails;
  if (std::any_of(checks.begin(), checks.end(), [](const Check& c) {
        return (c.relation == Relation::Le || c.relation == Relation::Ge) && c.verdict() == Verdict::Equality;
      }))
    return Verdict::Equality;
  return Verdict::Holds;
}

void merge_into(VerificationReport& into, const VerificationReport& part) {
  into.checks.insert(into.checks.end(), part.checks.begin(), part.checks.end());
  into.witnesses.insert(into.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
  into.notes.insert(into.notes.end(), part.notes.begin(), part.notes.end());
}

nlohmann::json to_json(const VerificationReport& report) {
  auto params = nlohmann::json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc = {{"label", c.label},
                         {"lhs", c.lhs.to_string()},
                         {"relation", to_string(c.relation)},
                         {"rhs", c.rhs.to_string()},
                         {"verdict", to_string(c.verdict())}};
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  return {{"claim_id", report.claim_id},
          {"params", params},
          {"scope", report.scope},
          {"verdict", to_string(report.verdict())},
          {"failures", report.failures()},
          {"witnesses", report.witnesses},
          {"notes", report.notes},
          {"checks", checks}};
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, nlohmann::json extra) {
  nlohmann::json out = {{"schema", 1}};
  if (extra.is_object())
    for (auto& [k, v] : extra.items()) out[k] = v;
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  out["reports"] = std::move(arr);
  out["verdict"] = all_hold(reports) ? "holds" : "fails";
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined_params(const VerificationReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : ";") + k + "=" + v;
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "claim_id,params,lhs,rhs,verdict,witness\n";
  for (const auto& r : reports) {
    const std::string params = joined_params(r);
    for (const auto& c : r.checks) {
      const std::string p = params + (params.empty() ? "" : ";") + "check=" + c.label;
      os << csv_field(r.claim_id) << ',' << csv_field(p) << ',' << c.lhs.to_string() << ',' << c.rhs.to_string() << ','
         << to_string(c.verdict()) << ',' << csv_field(c.witness) << '\n';
    }
    if (r.checks.empty())
      os << csv_field(r.claim_id) << ',' << csv_field(params) << ",,," << to_string(r.verdict()) << ",\n";
  }
}

void write_table(std::ostream& os, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    os << "== " << r.claim_id;
    if (!r.params.empty()) os << " (" << joined_params(r) << ")";
    os << " [" << r.scope << "]: " << to_string(r.verdict()) << ", " << r.checks.size() << " checks, "
       << r.failures() << " failed\n";
    for (const auto& c : r.checks) {
      if (c.verdict() == Verdict::Fails || r.checks.size() <= 12) {
        os << "   " << (c.verdict() == Verdict::Fails ? "FAIL " : "ok   ") << c.label << ": "
           << c.lhs.to_display_string() << ' ' << symbol(c.relation) << ' ' << c.rhs.to_display_string();
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << '\n';
      }
    }
    if (!r.witnesses.empty()) {
      os << "   witnesses:";
      for (const auto& w : r.witnesses) os << ' ' << w;
      os << '\n';
    }
    for (const auto& note : r.notes) os << "   note: " << note << '\n';
  }
}

bool all_hold(const std::vector<VerificationReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const VerificationReport& r) { return r.verdict() == Verdict::Fails; });
}

}  // namespace psisum
