#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "psisum/catalog.hpp"
#include "psisum/group.hpp"
#include "psisum/group_spec.hpp"
#include "psisum/primes.hpp"
#include "psisum/report.hpp"
#include "psisum/theorems.hpp"

namespace psisum::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Params {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> nmax;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> kmax;
  std::optional<std::uint32_t> r;
  std::optional<std::uint64_t> mkmax;
  std::optional<std::uint64_t> qmax;
  std::optional<std::uint64_t> pmax;
  std::optional<std::uint32_t> smax;
  std::uint64_t seed = 20240611;
  bool family = false;
};

using Reports = std::vector<VerificationReport>;
using Suite = std::function<Reports(const Params&, Catalog&)>;

std::uint64_t catalog_nmax(const Params& p, Catalog& c) { return p.nmax.value_or(c.bound()); }

Reports max_cyclic_suite(const Params& p, Catalog& c) {
  Reports out;
  for (std::uint64_t n = 1; n <= catalog_nmax(p, c); ++n) out.push_back(verify_max_cyclic(c, n));
  return out;
}

Reports seven_elevenths_suite(const Params& p, Catalog& c) {
  return {seven_elevenths_check(c, catalog_nmax(p, c)), second_maximal_family_check(2, p.kmax.value_or(99))};
}

Reports equality_family_suite(const Params& p, Catalog& c) {
  const std::vector<std::uint64_t> qs = p.q ? std::vector<std::uint64_t>{*p.q} : std::vector<std::uint64_t>{2, 3, 5};
  Reports out;
  for (std::uint64_t q : qs) out.push_back(second_maximal_family_check(q, p.kmax.value_or(60)));
  out.push_back(equality_catalog_check(c, catalog_nmax(p, c), p.q));
  return out;
}

Reports upper_bound_suite(const Params& p, Catalog& c) { return {equality_catalog_check(c, catalog_nmax(p, c), p.q)}; }

Reports equality_suite(const Params& p, Catalog& c) {
  if (!p.n) throw UsageError("verify equality needs --n");
  if (*p.n < 2) throw UsageError("--n must be at least 2");
  const std::uint64_t q = p.q.value_or(least_prime_divisor(*p.n));
  return {classify_equality(c, *p.n, q, p.family).report};
}

Reports mqr_suite(const Params& p, Catalog& c) {
  if (p.q || p.r) {
    if (!p.q || !p.r) throw UsageError("verify mqr needs both --q and --r, or neither");
    return {mqr_formula_check(*p.q, *p.r, &c)};
  }
  Reports out;
  for (auto [q, r] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 3}, {3, 4}, {5, 3}})
    out.push_back(mqr_formula_check(q, r, &c));
  return out;
}

Reports second_max_index_suite(const Params& p, Catalog& c) {
  Reports out;
  for (std::uint64_t n = 2; n <= catalog_nmax(p, c); ++n) out.push_back(lemma7_check(c, n));
  return out;
}

Reports audit_suite(const Params& p, Catalog&) {
  return {proof_inequality_audit(p.qmax.value_or(97), p.pmax.value_or(199), p.smax.value_or(6))};
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"aai", max_cyclic_suite},
      {"thm1", seven_elevenths_suite},
      {"thm2", seven_elevenths_suite},
      {"thm3", seven_elevenths_suite},
      {"thm4", equality_family_suite},
      {"thm5", equality_family_suite},
      {"prop6", upper_bound_suite},
      {"prop7", equality_family_suite},
      {"equality", equality_suite},
      {"mqr", mqr_suite},
      {"q8", [](const Params&, Catalog& c) { return Reports{q8_comparison(&c)}; }},
      {"lem1", [](const Params& p, Catalog&) { return Reports{psi_cyclic_check(p.nmax.value_or(300))}; }},
      {"lem2",
       [](const Params& p, Catalog&) { return Reports{coprime_product_check(p.nmax.value_or(400), 200, p.seed)}; }},
      {"lem3", [](const Params& p, Catalog&) { return Reports{psi_cyclic_check(p.nmax.value_or(300))}; }},
      {"lem4", [](const Params& p, Catalog&) { return Reports{cyclic_lower_bound_check(p.nmax.value_or(5000))}; }},
      {"lem5", [](const Params& p, Catalog&) { return Reports{semidirect_bound_check(p.mkmax.value_or(200))}; }},
      {"lem6", [](const Params& p, Catalog&) { return Reports{centralizer_bound_check(p.mkmax.value_or(200))}; }},
      {"lem7", second_max_index_suite},
      {"fmono", [](const Params& p, Catalog&) { return Reports{f_monotonicity_check(p.qmax.value_or(97))}; }},
      {"audit", audit_suite},
  };
  return suites;
}

Reports run_claim(const std::string& id, const Params& p, Catalog& c) {
  if (id == "all") {
    Reports out;
    for (const auto& [name, suite] : registry()) {
      static const std::set<std::string> aliases = {"equality", "thm2", "thm3", "thm5", "prop6", "prop7", "lem3"};
      if (aliases.contains(name)) continue;
      Params defaults;
      defaults.seed = p.seed;
      auto part = suite(defaults, c);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  for (const auto& [name, suite] : registry())
    if (name == id) return suite(p, c);
  throw UsageError("unknown claim '" + id + "'");
}

void emit_reports(std::ostream& out, const std::string& format, const Reports& reports, nlohmann::json extra) {
  if (format == "json")
    out << reports_to_json(reports, std::move(extra)).dump(2) << '\n';
  else if (format == "csv")
    write_csv(out, reports);
  else
    write_table(out, reports);
}

std::string profile_text(const OrderProfile& profile) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, c] : profile) {
    os << (first ? "" : ", ") << d << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [name, suite] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return ids;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum of element orders: closed forms, small-group catalogs and exact verification suites", "psisum"};
  app.require_subcommand(1);

  std::string format = "table";
  std::optional<std::string> cache_dir;
  std::uint64_t enum_bound = kDefaultEnumerationBound;
  bool allow_slow = false;
  unsigned threads = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache-dir", cache_dir, "Directory for persisted catalogs");
  app.add_option("--enum-bound", enum_bound, "Largest order enumerated exhaustively")->check(CLI::Range(1, 1000000));
  app.add_flag("--allow-slow-enumeration", allow_slow,
               "Acknowledge that --enum-bound above " + std::to_string(kDefaultEnumerationBound) + " is slow");
  app.add_option("--threads", threads, "Enumeration worker threads (0: hardware concurrency)");

  std::string spec_text;
  auto* psi_cmd = app.add_subcommand("psi", "Sum of element orders of one group");
  psi_cmd->add_option("spec", spec_text, "Group spec, e.g. C12, A[2,6], D8, Q8, M(2,4), SD(5,4,2), C2xC2xC3")
      ->required();

  std::uint64_t order = 0;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Distinct psi values over all groups of order n");
  spectrum_cmd->add_option("n", order)->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "All groups of order n up to isomorphism");
  catalog_cmd->add_option("n", order)->required();

  std::string claim;
  Params params;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("claim", claim, "Claim id, or 'all'")->required();
  verify_cmd->add_option("--n", params.n, "Group order (verify equality)");
  verify_cmd->add_option("--nmax", params.nmax, "Largest order checked");
  verify_cmd->add_option("--q", params.q, "Least prime divisor");
  verify_cmd->add_option("--kmax", params.kmax, "Largest cofactor k in (C_q x C_q) x C_k");
  verify_cmd->add_option("--r", params.r, "Exponent r of M(q,r)");
  verify_cmd->add_option("--mkmax", params.mkmax, "Largest m*k for SD(m,k,a)");
  verify_cmd->add_option("--qmax", params.qmax, "Largest prime q");
  verify_cmd->add_option("--seed", params.seed, "Seed for randomized pair selection");
  verify_cmd->add_flag("--family", params.family, "Restrict to construction families past the enumeration bound");

  auto* audit_cmd = app.add_subcommand("audit", "Audit the numeric inequalities of the bound arguments");
  audit_cmd->add_option("--qmax", params.qmax, "Largest prime q");
  audit_cmd->add_option("--pmax", params.pmax, "Largest prime p");
  audit_cmd->add_option("--smax", params.smax, "Largest exponent s");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enum_bound > kDefaultEnumerationBound && !allow_slow)
      throw UsageError("--enum-bound above " + std::to_string(kDefaultEnumerationBound) +
                       " requires --allow-slow-enumeration");
    if (enum_bound > kEnumerationHardCap)
      throw UsageError("--enum-bound cannot exceed " + std::to_string(kEnumerationHardCap));
    if (verify_cmd->parsed() && claim != "all" &&
        std::find(claim_ids().begin(), claim_ids().end(), claim) == claim_ids().end())
      throw UsageError("unknown claim '" + claim + "'");

    EnumerationOptions options;
    options.bound = enum_bound;
    options.threads = threads;
    options.warn = [&err](const std::string& msg) { err << msg << '\n'; };
    std::optional<std::filesystem::path> cache;
    if (cache_dir) cache = std::filesystem::path(*cache_dir);
    Catalog catalog(options, cache);

    if (psi_cmd->parsed()) {
      const GroupSpec spec = parse_group_spec(spec_text);
      const Group g = build_group(spec);
      const std::uint64_t value = psi(g);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["spec"] = to_string(spec);
        j["order"] = g.order();
        j["psi"] = std::to_string(value);
        j["cyclic"] = is_cyclic(g);
        j["abelian"] = is_abelian(g);
        j["order_profile"] = profile_to_json(order_profile(g));
        out << j.dump(2) << '\n';
      } else if (format == "csv") {
        out << "spec,order,psi\n" << to_string(spec) << ',' << g.order() << ',' << value << '\n';
      } else {
        out << value << '\n';
      }
      return kExitOk;
    }

    if (spectrum_cmd->parsed()) {
      const auto spectrum = catalog.psi_spectrum(order);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["n"] = order;
        j["spectrum"] = nlohmann::json::array();
        for (const auto& s : spectrum)
          j["spectrum"].push_back({{"psi", std::to_string(s.psi)}, {"count", s.count}, {"classes", s.witnesses}});
        out << j.dump(2) << '\n';
      } else if (format == "csv") {
        out << "psi,count,classes\n";
        for (const auto& s : spectrum) {
          out << s.psi << ',' << s.count << ',';
          for (std::size_t i = 0; i < s.witnesses.size(); ++i) out << (i ? ";" : "") << s.witnesses[i];
          out << '\n';
        }
      } else {
        for (const auto& s : spectrum) {
          out << s.psi << "  x" << s.count << " ";
          for (const auto& w : s.witnesses) out << ' ' << w;
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (catalog_cmd->parsed()) {
      const auto& entries = catalog.groups(order);
      if (format == "json") {
        out << catalog_to_json(order, entries).dump(2) << '\n';
      } else if (format == "csv") {
        out << "name,psi,cyclic,abelian,order_profile\n";
        for (const auto& e : entries)
          out << e.name << ',' << e.psi << ',' << (e.cyclic ? "true" : "false") << ','
              << (e.abelian ? "true" : "false") << ",\"" << profile_text(e.profile) << "\"\n";
      } else {
        out << entries.size() << " groups of order " << order << '\n';
        for (const auto& e : entries)
          out << "  " << e.name << "  psi=" << e.psi << (e.cyclic ? "  cyclic" : e.abelian ? "  abelian" : "") << "  "
              << profile_text(e.profile) << '\n';
      }
      return kExitOk;
    }

    Reports reports;
    nlohmann::json extra;
    if (verify_cmd->parsed()) {
      reports = run_claim(claim, params, catalog);
      extra["command"] = "verify";
      extra["claim"] = claim;
    } else {
      reports = audit_suite(params, catalog);
      extra["command"] = "audit";
    }
    emit_reports(out, format, reports, std::move(extra));
    return all_hold(reports) ? kExitOk : kExitClaimFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace psisum::cli
